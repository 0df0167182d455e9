# Run the lqmatch test suite from a source checkout:
#
#     python utest.py [pattern]
#
# The default pattern runs every tests/test_*.py module.

import os.path
import sys
import unittest

HERE = os.path.dirname(os.path.realpath(__file__))

if __name__ == '__main__':
    sys.path.insert(0, os.path.dirname(HERE))
    pattern = sys.argv[1] if len(sys.argv) > 1 else 'test_*.py'
    suites = unittest.defaultTestLoader.discover(HERE, pattern,
                                                 top_level_dir=HERE)
    result = unittest.TextTestRunner(verbosity=2).run(suites)
    sys.exit(0 if result.wasSuccessful() else 1)
