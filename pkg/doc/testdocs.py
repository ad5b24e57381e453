#!/usr/bin/env python
"""
Script to run doctests.
"""

import doctest
import sys
import os
from argparse import ArgumentParser

optionflags = doctest.NORMALIZE_WHITESPACE


class MyOutputChecker(doctest.OutputChecker):
    """
    Modification of doctest.OutputChecker to work better with the pyGentle
    tutorial:
      * Often, we don't want to have the output that is printed by Python in
    the manual, as it just takes up space without adding any useful
    information.
    """

    def __init__(self, strict):
        self.strict = strict

    def check_output(self, want, got, optionflags):
        if self.strict or want != '':
            return doctest.OutputChecker.check_output(self, want, got, optionflags)
        return True


def mytestfile(filename, globs, optionflags, strict=False):
    parser = doctest.DocTestParser()
    globs = {} if globs is None else globs.copy()
    name = os.path.basename(filename)
    runner = doctest.DocTestRunner(checker=MyOutputChecker(strict=strict), optionflags=optionflags)
    # Read the file, convert it to a test, and run it.
    s = open(filename).read()
    test = parser.get_doctest(s, globs, name, filename, 0)
    runner.run(test)
    runner.summarize()
    return runner.failures, runner.tries

def print_script(filename):
    parser = doctest.DocTestParser()
    s = open(filename).read()
    print("".join([ex.source for ex in parser.get_examples(s) if "+SKIP" not in ex.source]))

# ==============================================================================
if __name__ == "__main__":

    # Process command line
    parser = ArgumentParser(description="Run the examples in pyGentle documentation files.")
    parser.add_argument("docfiles", nargs="+", metavar="FILE")
    parser.add_argument("--strict", action="store_true", default=False,
                        help="Check every output, including outputs the document leaves empty.")
    parser.add_argument("-p", "--print", action="store_true", default=False, dest="dump",
                        help="Just print out the script extracted from the document, don't run the test.")
    options = parser.parse_args()

    failures = 0
    for docfile in options.docfiles:
        if options.dump:
            print_script(docfile)
        else:
            failures += mytestfile(docfile, globs={}, optionflags=optionflags, strict=options.strict)[0]
    sys.exit(failures and 1 or 0)
