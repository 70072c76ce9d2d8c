import sys

from .cli import __main__
sys.exit(__main__())
