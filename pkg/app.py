# app.py
# Command-line entry point, e.g. `python app.py verify stiefel --n 1`.

from __future__ import annotations

from hommodels.cli import main

if __name__ == "__main__":
    main()
