"""
This module tallies law reports across suite runs and summarizes them.
"""

import collections



class SuiteDetail(object):
    def __init__(self, logger):
        self.logger = logger
        self.passed = collections.defaultdict(int)
        self.failed = collections.defaultdict(int)
        self.skipped = collections.defaultdict(int)
        self.checked = collections.defaultdict(int)
        self.failures = []
        self.skips = []

    def add(self, report):
        """
        To be called for each LawReport produced by a run.
        """
        key = (report.structure, report.law)
        self.checked[report.structure] += report.checked
        if report.failed:
            self.failed[report.structure] += 1
            self.failures.append(report)
        elif report.status == 'skip':
            self.skipped[report.structure] += 1
            self.skips.append(report)
        else:
            self.passed[report.structure] += 1
        self.logger.debug('Law "%s" on %s: %s after %s tuples.',
            key[1], key[0], report.status, report.checked
        )

    @property
    def any_failed(self):
        return bool(self.failures)

    def report(self):
        # Structures with failures first, then by name
        structures = sorted(
            set(self.passed) | set(self.failed) | set(self.skipped),
            key=lambda name: (-self.failed[name], name)
        )
        for structure in structures:
            self.logger.log('Structure %s: %s laws passed, %s failed, %s skipped; %s tuples checked.',
                structure, self.passed[structure], self.failed[structure],
                self.skipped[structure], self.checked[structure]
            )
        for report in self.skips:
            self.logger.log('Skipped law "%s": %s', report.law, report.reason)
        for report in self.failures:
            self.logger.error('Law "%s" failed on %s at clause "%s" (%s).',
                report.law, report.structure, report.clause.name, report.clause.equation
            )
            self.logger.log('  witness: (%s)', ', '.join(
                report.render_value(a) for a in report.witness
            ))
            self.logger.log('  left:    %s', report.render_value(report.left))
            self.logger.log('  right:   %s', report.render_value(report.right))
