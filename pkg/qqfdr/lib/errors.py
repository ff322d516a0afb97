#!/usr/bin/env python
#
# Exceptions raised by the qqfdr library
# Copyright (C) 2026 qqfdr developers
#
# Licensed under the MIT License (MIT)
#
# All of them derive from ValueError so that callers which only care about
# "bad data or bad parameters" can catch a single class. The command-line
# tools map any QQFdrError to exit code 2.


class QQFdrError(ValueError):
    '''Base class of every validation error raised by qqfdr.'''


class InputError(QQFdrError):
    '''A p-value dataset could not be ingested. `row` is the 1-based data row, when known.'''

    def __init__(self, message, row=None):
        self.row = row
        if row is not None:
            message = "row %i: %s" % (row, message)
        super(InputError, self).__init__(message)


class EmptyInput(InputError):
    def __init__(self):
        super(EmptyInput, self).__init__("input contains no data rows")


class NonNumeric(InputError):
    def __init__(self, row, value):
        self.value = value
        super(NonNumeric, self).__init__("p-value %r is not a number" % value, row=row)


class OutOfRange(InputError):
    def __init__(self, row, value):
        self.value = value
        super(OutOfRange, self).__init__("p-value %r is outside (0, 1] (use --clamp-zero to accept p = 0)" % value, row=row)


class DuplicateId(InputError):
    def __init__(self, test_id, row=None):
        self.test_id = test_id
        super(DuplicateId, self).__init__("duplicate test id %r" % test_id, row=row)


class MissingColumn(InputError):
    def __init__(self, column):
        self.column = column
        super(MissingColumn, self).__init__("column %r not found in header" % (column,))


class InvalidLevel(QQFdrError):
    def __init__(self, q):
        self.q = q
        super(InvalidLevel, self).__init__("q must be in (0,1], got %r" % (q,))


class NoDiscoveries(QQFdrError):
    def __init__(self, q):
        self.q = q
        super(NoDiscoveries, self).__init__("no discoveries at q=%s" % (q,))


class DegenerateExtent(QQFdrError):
    def __init__(self, axis_max_x, axis_max_y):
        super(DegenerateExtent, self).__init__(
            "cannot draw a Q-Q plot with a degenerate extent (axis_max_x=%r, axis_max_y=%r): "
            "at least two tests with some p < 1 are needed" % (axis_max_x, axis_max_y))


class InvalidSpec(QQFdrError):
    '''A simulation specification violates its invariants.'''


class InvalidOptions(QQFdrError):
    '''Rendering options violate their invariants.'''
