""" Helpers shared by the unit tests: sample file paths, golden file comparison, constructed datasets """

import filecmp
import os
import shutil

from ..lib.ingest import PValueSet

TESTS_DIR = os.path.dirname(os.path.realpath(__file__))
SUBDIRS = {'input': 'files', 'results': 'results', 'output': 'out'}


def path_sample_files(kind, name=None):
    """ Absolute path of a sample input ('input'), a golden result ('results') or a scratch output ('output') """
    folder = os.path.join(TESTS_DIR, SUBDIRS[kind])
    return os.path.join(folder, name) if name else folder

def check_eq_files(path1, path2):
    """ Byte for byte comparison of two files """
    return filecmp.cmp(path1, path2, shallow=False)

def remove_if_exist(path):
    """ Delete a file if present, return whether something was deleted """
    if os.path.isfile(path):
        os.remove(path)
        return True
    return False

def reset_output_dir():
    """ Empty the out directory """
    outfolder = path_sample_files('output')
    shutil.rmtree(outfolder, ignore_errors=True)
    os.makedirs(outfolder)

def read_bytes(path):
    with open(path, 'rb') as fh:
        return fh.read()

#### DATASETS ####

FOUR_POINTS = [0.04, 0.005, 0.03, 0.01]

def plateau_cut_pvalues(m=200, plateau=0.199, k=136):
    """ m p-values sorted ascending: a plateau at `plateau` for ranks 1..k, then 0.35*i/m, so that at q=0.3 the step-up cut falls exactly at rank k """
    return [plateau if i <= k else 0.35 * i / m for i in range(1, m + 1)]

def plateau_minimum_pvalues(m=200):
    """ Same construction, with the raw minimum of m*p/i at rank 70 where p=0.089 """
    return plateau_cut_pvalues(m=m, plateau=0.089, k=70)

def dataset_text(pvalues):
    """ Plain text dataset, one p-value per line, repr keeps every value exact """
    return "".join("%r\n" % p for p in pvalues)

def write_dataset(path, pvalues):
    with open(path, 'w') as fh:
        fh.write(dataset_text(pvalues))
    return path

def pset(pvalues):
    return PValueSet.from_pvalues(pvalues)
