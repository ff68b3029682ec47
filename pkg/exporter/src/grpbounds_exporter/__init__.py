"""One-shot export of a small-groups database to JSONL catalogs.

This package only drives an external computer algebra system and
reshapes its output; it never does group theory of its own and never
imports the engine that consumes the files.
"""

__version__ = "0.1.0"
