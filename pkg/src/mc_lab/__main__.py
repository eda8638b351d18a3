"""Allow `python -m mc_lab` to behave like the installed mc-lab script."""

from .harness import main

main()
