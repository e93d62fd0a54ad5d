"""Allow running as: python -m devils_coliseum"""

from devils_coliseum.cli import main

if __name__ == "__main__":
    raise SystemExit(main())
