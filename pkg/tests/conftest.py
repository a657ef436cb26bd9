import os
import sys

# Make the sibling oracle module importable regardless of how pytest was
# invoked (rootdir, installed package, etc).
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

VECTOR_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "vectors")
