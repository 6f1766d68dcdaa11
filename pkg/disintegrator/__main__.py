"""Entry point: python -m disintegrator"""

from disintegrator.cli import cli

if __name__ == "__main__":
    cli()
