# Shared Utilities Module
