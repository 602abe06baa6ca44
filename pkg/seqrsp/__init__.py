"""Sequential remote state preparation with unsharp measurements shared by several Bobs."""
import sys

if sys.version_info < (3, 9):
    raise DeprecationWarning("Python 3.9 or newer is required.")

__version__ = "1.0.0"
