# Oracle Harness Module
from .enumeration import Enumeration
from .ec import PolicyMode, FuelPolicy, ECResult, ec
from .lim import lim_baire
from .realizers import (
    Realizer, Trace, TraceRecord, pair_streams, unpair_stream, weihrauch_compose,
)

__all__ = [
    "Enumeration",
    "PolicyMode", "FuelPolicy", "ECResult", "ec",
    "lim_baire",
    "Realizer", "Trace", "TraceRecord", "pair_streams", "unpair_stream", "weihrauch_compose",
]
