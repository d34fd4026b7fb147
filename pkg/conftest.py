"""让 tests/ 可以像 main.py 一样直接导入顶层模块"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
