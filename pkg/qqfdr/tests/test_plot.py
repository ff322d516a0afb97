from __future__ import print_function

import json

import pytest

from .aux_tests import path_sample_files, reset_output_dir, read_bytes, check_eq_files, write_dataset, plateau_cut_pvalues

from .. import plot

def setup_module():
    """ Initialize the tests by emptying the out directory """
    reset_output_dir()

def test_plot_golden(capsys):
    """ plot: test the four points plot matches the committed SVG """
    filein = path_sample_files('input', 'four_points.txt')
    fileout = path_sample_files('output', 'qq_four_points.svg')
    assert plot.main('-i "%s" --q 0.05 -o "%s"' % (filein, fileout)) == 0
    assert check_eq_files(fileout, path_sample_files('results', 'four_points.svg'))
    assert "k*=4 of m=4 significant" in capsys.readouterr().out

def test_plot_plateau(capsys):
    """ plot: test the implied alpha read-off of the constructed m=200 dataset, and the side reports """
    filein = write_dataset(path_sample_files('output', 'plateau.txt'), plateau_cut_pvalues())
    fileout = path_sample_files('output', 'qq_plateau.svg')
    filereport = path_sample_files('output', 'qq_plateau.json')
    filetable = path_sample_files('output', 'qq_plateau.csv')
    assert plot.main('-i "%s" --q 0.3 --q-lines 0.05,0.1 -o "%s" --report "%s" -t "%s" -v' % (filein, fileout, filereport, filetable)) == 0
    svg = read_bytes(fileout).decode('utf-8')
    assert '= 0.199</text>' in svg
    assert svg.count('class="fdr"') == 3
    assert json.loads(read_bytes(filereport).decode('utf-8'))['proportion_significant'] == 0.68
    assert len(read_bytes(filetable).splitlines()) == 201
    out = capsys.readouterr().out
    assert "implied alpha = 10^-0.7011 = 0.199" in out
    assert "proportion significant = 10^-0.1675 = 0.68" in out

def test_plot_deterministic():
    """ plot: test two invocations give identical SVG bytes """
    filein = path_sample_files('input', 'four_points.csv')
    out1 = path_sample_files('output', 'det1.svg')
    out2 = path_sample_files('output', 'det2.svg')
    for fileout in (out1, out2):
        assert plot.main('-i "%s" --q 0.1 --q-lines 0.25 --width 500 --height 400 -o "%s" --silent' % (filein, fileout)) == 0
    assert read_bytes(out1) == read_bytes(out2)
    assert b'width="500" height="400"' in read_bytes(out1)

def test_plot_single_test(capsys):
    """ plot: test a single p = 1 cannot be plotted """
    filein = path_sample_files('input', 'single_one.txt')
    fileout = path_sample_files('output', 'single.svg')
    assert plot.main('-i "%s" -o "%s"' % (filein, fileout)) == 2
    assert "degenerate extent" in capsys.readouterr().err

def test_plot_invalid_options(capsys):
    """ plot: test invalid rendering options and levels """
    filein = path_sample_files('input', 'four_points.txt')
    fileout = path_sample_files('output', 'invalid.svg')
    assert plot.main('-i "%s" -o "%s" --margin 400' % (filein, fileout)) == 2
    with pytest.raises(SystemExit) as exc:
        plot.main('-i "%s" -o "%s" --q-lines 0.05,2' % (filein, fileout))
    assert exc.value.code == 2
    assert "q must be in (0,1]" in capsys.readouterr().err

def test_plot_y_max(capsys):
    """ plot: test the vertical ceiling """
    filein = path_sample_files('input', 'four_points.txt')
    fileout = path_sample_files('output', 'capped.svg')
    assert plot.main('-i "%s" -o "%s" --y-max 2 -v' % (filein, fileout)) == 0
    assert read_bytes(fileout).count(b'<polygon') == 1
    assert "1 point(s) clipped" in capsys.readouterr().out
