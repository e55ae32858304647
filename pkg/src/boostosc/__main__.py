"""Entry point for ``python -m boostosc``."""

from .cli import main

if __name__ == "__main__":
    main()
