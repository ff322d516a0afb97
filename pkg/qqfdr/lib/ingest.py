#!/usr/bin/env python
#
# P-values datasets ingestion: parsing, validation and ordering
# Copyright (C) 2026 qqfdr developers
#
# Licensed under the MIT License (MIT)
#
# Three text formats are understood:
# - plain: one p-value per line, lines starting with "#" are comments, blank lines are skipped.
# - csv / tsv: a header row is mandatory, the p column is found by name (or 1-based column number),
#   the id column is optional (ids are then synthesized as "test_<row>").
# Rows are numbered from 1 and count only data rows (not the header, comments or blank lines),
# so that "row 3" always designates the third p-value of the file.
#

from __future__ import annotations

import csv
import io
import math
from collections import namedtuple

import numpy as np

from .errors import EmptyInput, NonNumeric, OutOfRange, DuplicateId, MissingColumn, InputError

FORMATS = ('plain', 'csv', 'tsv')
# Header names accepted for the p-value column when none is specified, in order of preference
DEFAULT_P_COLUMNS = ('p', 'pvalue', 'p_value', 'pval', 'p.value')
DEFAULT_ID_COLUMNS = ('id', 'name', 'test')


TestRecord = namedtuple('TestRecord', ['id', 'p'])
TestRecord.__doc__ = '''A labeled observed p-value, 0 < p <= 1.'''


class PValueSet(object):
    '''Labeled p-values in input order. Immutable once built.'''

    __slots__ = ['records', 'm', '_p']

    def __init__(self, records):
        records = tuple(TestRecord(str(r[0]), float(r[1])) for r in records)
        if not records:
            raise EmptyInput()
        seen = set()
        for row, rec in enumerate(records, 1):
            if rec.id in seen:
                raise DuplicateId(rec.id, row=row)
            seen.add(rec.id)
            if math.isnan(rec.p):
                raise NonNumeric(row, rec.p)
            if not 0.0 < rec.p <= 1.0:
                raise OutOfRange(row, rec.p)
        self.records = records
        self.m = len(records)
        p = np.array([rec.p for rec in records], dtype=np.float64)
        p.setflags(write=False)
        self._p = p

    @property
    def ids(self):
        return [rec.id for rec in self.records]

    @property
    def p(self):
        '''p-values as a read-only float64 array, in input order'''
        return self._p

    def __len__(self):
        return self.m

    def __iter__(self):
        return iter(self.records)

    def __eq__(self, other):
        return isinstance(other, PValueSet) and self.records == other.records

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "PValueSet(m=%i)" % self.m

    @classmethod
    def from_pvalues(cls, pvalues, ids=None):
        '''Build a set from bare p-values, synthesizing "test_<row>" ids when none are given'''
        pvalues = list(pvalues)
        if ids is None:
            ids = ["test_%i" % i for i in range(1, len(pvalues)+1)]
        return cls(zip(ids, pvalues))


class OrderedTests(object):
    '''p-values sorted ascending (stable on ties), with ranks 1..m. All the FDR maths run on this.'''

    __slots__ = ['ids', 'p', 'ranks', 'source_index', 'm']

    def __init__(self, ids, p, source_index):
        p = np.asarray(p, dtype=np.float64)
        if p.ndim != 1 or p.size == 0:
            raise EmptyInput()
        if np.any(p[1:] < p[:-1]):
            raise ValueError("p-values must be sorted in ascending order to build OrderedTests")
        self.m = int(p.size)
        self.ids = tuple(ids)
        self.p = p
        self.ranks = np.arange(1, self.m + 1, dtype=np.int64)
        self.source_index = np.asarray(source_index, dtype=np.int64)
        for arr in (self.p, self.ranks, self.source_index):
            arr.setflags(write=False)

    @property
    def entries(self):
        '''List of (rank, id, p) tuples'''
        return [(i + 1, self.ids[i], float(self.p[i])) for i in range(self.m)]

    def to_pvalue_set(self):
        '''The same tests, as a PValueSet in rank order'''
        return PValueSet(zip(self.ids, self.p.tolist()))

    def __len__(self):
        return self.m

    def __repr__(self):
        return "OrderedTests(m=%i)" % self.m


def order_tests(pset):
    '''Sort a PValueSet by ascending p-value. Ties keep their input order (stable sort), so tied p-values get distinct consecutive ranks.'''
    order = np.argsort(pset.p, kind='stable')
    ids = pset.ids
    return OrderedTests([ids[i] for i in order], pset.p[order], order)


#***********************************
#           PARSING
#***********************************

def _parse_p(raw, row, clamp_zero=None):
    '''Convert one field to a validated p-value'''
    try:
        p = float(raw.strip())
    except (ValueError, AttributeError):
        raise NonNumeric(row, raw)
    if math.isnan(p):
        raise NonNumeric(row, raw)
    if p == 0.0 and clamp_zero is not None:
        return float(clamp_zero)
    if not 0.0 < p <= 1.0:
        raise OutOfRange(row, raw.strip())
    return p

def _decode(text):
    if isinstance(text, (bytes, bytearray)):
        try:
            return bytes(text).decode('utf-8-sig')
        except UnicodeDecodeError as exc:
            raise InputError("input is not valid UTF-8 (%s)" % exc)
    if text.startswith(u'\ufeff'):
        return text[1:]
    return text

def _find_column(header, wanted, defaults, required):
    '''Locate a column by name, by 1-based number, or by the first matching default name. Returns None if optional and absent.'''
    normalized = [h.strip().lower() for h in header]
    if wanted is not None:
        if isinstance(wanted, int) or (isinstance(wanted, str) and wanted.strip().isdigit() and wanted.strip().lower() not in normalized):
            idx = int(wanted) - 1
            if 0 <= idx < len(header):
                return idx
            raise MissingColumn(wanted)
        try:
            return normalized.index(str(wanted).strip().lower())
        except ValueError:
            raise MissingColumn(wanted)
    for name in defaults:
        if name in normalized:
            return normalized.index(name)
    if required:
        raise MissingColumn(defaults[0])
    return None

def _parse_plain(text, clamp_zero):
    records = []
    row = 0
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        row += 1
        records.append(("test_%i" % row, _parse_p(line, row, clamp_zero)))
    return records

def _parse_delimited(text, delimiter, p_column, id_column, clamp_zero):
    reader = csv.reader(io.StringIO(text, newline=''), delimiter=delimiter, quotechar='"')
    header = None
    for fields in reader:
        if fields and any(f.strip() for f in fields):
            header = fields
            break
    if header is None:
        raise EmptyInput()
    p_idx = _find_column(header, p_column, DEFAULT_P_COLUMNS, required=True)
    id_idx = _find_column(header, id_column, DEFAULT_ID_COLUMNS, required=id_column is not None)

    rows = []
    row = 0
    for fields in reader:
        if not fields or not any(f.strip() for f in fields):
            continue
        row += 1
        if p_idx >= len(fields):
            raise NonNumeric(row, '')
        p = _parse_p(fields[p_idx], row, clamp_zero)
        test_id = None
        if id_idx is not None and id_idx < len(fields) and fields[id_idx].strip():
            test_id = fields[id_idx].strip()
        rows.append((row, test_id, p))

    explicit = set()
    for row, test_id, _ in rows:
        if test_id is None:
            continue
        if test_id in explicit:
            raise DuplicateId(test_id, row=row)
        explicit.add(test_id)
    records = []
    for row, test_id, p in rows:
        if test_id is None:
            test_id = _synthesize_id(row, explicit)
        records.append((test_id, p))
    return records

def _synthesize_id(row, taken):
    '''"test_<row>" for a blank id cell, suffixed with "_2", "_3"... while it clashes with an id of the file'''
    test_id = base = "test_%i" % row
    n = 1
    while test_id in taken:
        n += 1
        test_id = "%s_%i" % (base, n)
    return test_id

def parse_pvalues(text, format='plain', p_column=None, id_column=None, clamp_zero=None):
    '''Parse a p-values dataset (bytes or str) into a PValueSet.

    format is one of "plain", "csv", "tsv". For csv/tsv, p_column and id_column are header names or
    1-based column numbers; by default the p column is the first of DEFAULT_P_COLUMNS found in the header
    and the id column the first of DEFAULT_ID_COLUMNS (if any).
    p = 0 is rejected unless clamp_zero (a tiny positive real) is given, in which case it replaces the zero.
    Errors: EmptyInput, NonNumeric(row), OutOfRange(row), DuplicateId(id), MissingColumn(column).
    '''
    if format not in FORMATS:
        raise InputError("unknown format %r (expected one of %s)" % (format, ', '.join(FORMATS)))
    if clamp_zero is not None and not 0.0 < clamp_zero <= 1.0:
        raise InputError("clamp_zero must be in (0,1], got %r" % (clamp_zero,))
    text = _decode(text)
    if format == 'plain':
        records = _parse_plain(text, clamp_zero)
    else:
        records = _parse_delimited(text, ',' if format == 'csv' else '\t', p_column, id_column, clamp_zero)
    if not records:
        raise EmptyInput()
    return PValueSet(records)

def load_pvalues(path, format='plain', p_column=None, id_column=None, clamp_zero=None):
    '''Read and parse a dataset file. IOError/OSError propagate to the caller.'''
    with open(path, 'rb') as fh:
        data = fh.read()
    return parse_pvalues(data, format=format, p_column=p_column, id_column=id_column, clamp_zero=clamp_zero)
