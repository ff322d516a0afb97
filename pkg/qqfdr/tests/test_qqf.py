from __future__ import print_function

import pytest

from .aux_tests import path_sample_files, reset_output_dir, check_eq_files

from .. import qqf

def setup_module():
    """ Initialize the tests by emptying the out directory """
    reset_output_dir()

def test_qqf_subcommands(capsys):
    """ qqf: test the subcommands are dispatched with their own arguments """
    filein = path_sample_files('input', 'four_points.txt')
    fileout = path_sample_files('output', 'qqf.svg')
    assert qqf.main(['analyze', '-i', filein, '--q', '0.05']) == 0
    assert qqf.main(['plot', '-i', filein, '-o', fileout, '--silent']) == 0
    assert check_eq_files(fileout, path_sample_files('results', 'four_points.svg'))
    assert qqf.main(['qq', '-i', filein, '-o', fileout, '--silent']) == 0
    assert qqf.main(['sim', '--m', '5']) == 0
    assert qqf.main(['regime', '--m', '20', '--runs', '2', '--silent']) == 0
    assert qqf.main(['analyze', '-i', path_sample_files('input', 'single_one.txt')]) == 0

def test_qqf_help(capsys):
    """ qqf: test help is passed down to the subcommand """
    with pytest.raises(SystemExit) as exc:
        qqf.main(['plot', '--help'])
    assert exc.value.code == 0
    assert "qqf plot" in capsys.readouterr().out
    with pytest.raises(SystemExit) as exc:
        qqf.main(['frobnicate'])
    assert exc.value.code == 2
