"""CLI entry point for cyclic-qplane."""

from cyclic_qplane import main

if __name__ == "__main__":
    main()
