import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent / "src"))

# Some tests print exact counts with tens of thousands of digits.
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)
