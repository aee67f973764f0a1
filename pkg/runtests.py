#!/usr/bin/env python
"""Run the test suite without installing the package: ``python runtests.py [pytest args]``."""
import os
import sys

import pytest

if __name__ == '__main__':
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'symbolic_shifts.tests.settings')
    sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
    sys.exit(pytest.main(sys.argv[1:] or ['symbolic_shifts/tests']))
