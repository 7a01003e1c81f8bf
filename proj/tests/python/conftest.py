import os
import sys

# The extension module is built by CMake; ctest passes its directory here.
_py_dir = os.environ.get("WABL_PY_DIR")
if _py_dir and _py_dir not in sys.path:
    sys.path.insert(0, _py_dir)
