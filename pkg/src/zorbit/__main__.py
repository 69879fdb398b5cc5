"""Module entry point for ``python -m zorbit``."""

from .cli import run

if __name__ == "__main__":
    run()
