"""Tests the command-line interface."""

########################################
# Dependencies                         #
########################################
import stann
from stann.cli import run_command
from stann.cli import dump_document
from stann.cli import load_document
from stann.cli import digest
from stann.catalog import factorizations_d_odd
from fixtures import logging_disabled
from fixtures import setup_logging
from fixtures import capture_stdout
from fixtures import capture_stderr
from fixtures import valid_dot
from pytest import raises
from subprocess import run, PIPE
from pathlib import Path
from sys import executable as python
import json


########################################
# Fixtures                             #
########################################

here = Path(__file__).resolve().parent
root = here.parent


def report(*arguments):
    """Runs a command in this process and returns exit code and output."""
    with logging_disabled(), capture_stdout() as stdout, capture_stderr():
        code = run_command(list(arguments))
    return (code, stdout.text())


def results(*arguments):
    (code, text) = report(*arguments)
    assert code == 0
    return json.loads(text)['results']


def run_stann(*arguments):
    # Runs from the project's root folder, like the other process tests.
    return run([python, '-m', 'stann', *arguments], cwd=root,
               stdout=PIPE, stderr=PIPE, universal_newlines=True)


def write(name, content):
    file = here/name
    if isinstance(content, str):
        file.write_text(content, encoding='utf-8')
    else:
        file.write_text(json.dumps(content), encoding='utf-8')
    return file


def module(name, phi, psi):
    return {'name': name, 'phi': phi, 'psi': psi}


def document(*modules):
    return {
        'ring':      {'variables': ['y'], 'field': 'QQ'},
        'potential': 'y^3',
        'modules':   list(modules),
    }


########################################
# Tests                                #
########################################

def test_verify():
    output = results('verify', '--catalog', 'D5')
    assert [entry['name'] for entry in output['modules']] \
        == ['A', 'M_0', 'M_1', 'M_2', 'X_0', 'X_1', 'X_2']
    assert all(entry['valid'] and entry['size'] == (1 if entry['name'] == 'A' else 2)
               for entry in output['modules'])


def test_annihilate():
    (code, text) = report('annihilate', '--catalog', 'D5', '--module', 'X_2')
    assert code == 0
    document = json.loads(text)
    assert document['tool'] == 'StAnn'
    assert document['version'] == stann.__version__
    assert document['command'] == 'annihilate'
    assert document['input']['source'] == 'catalog:D5'
    (entry,) = document['results']['modules']
    assert entry == {'name': 'X_2', 'annihilator': ['x', 'y^2'], 'jacobian': True}
    output = results('annihilate', '--catalog', 'A0:2', '--witnesses')
    for entry in output['modules']:
        assert len(entry['witnesses']) == len(entry['annihilator'])
        assert all({'generator', 'p', 't'} <= set(witness)
                   for witness in entry['witnesses'])
    (code, _) = report('annihilate', '--catalog', 'D5', '--module', 'Y')
    assert code == 2


def test_space():
    output = results('space', '--catalog', 'D7', '--closed-sets')
    assert output['closed_sets'] == 11
    assert len(output['lattice']) == 11
    assert output['lattice'][0] == []
    assert output['compact'] == {'witness': 'M_3', 'minimum': ['x^2', 'x*y', 'y^3']}
    output = results('space', '--catalog', 'D5')
    assert 'lattice' not in output
    assert output['classes'][0] == {'members': ['A', 'M_0'],
                                    'annihilator': ['x^2', 'y']}
    assert output['order'] == [[1, 4], [2, 1], [2, 5], [4, 3], [5, 4]]
    (code, text) = report('space', '--catalog', 'D5', '--format', 'text')
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == 'A: (x^2, y)'
    assert lines[-1] == '5 classes, 7 closed sets'


def test_hasse():
    output = results('hasse', '--catalog', 'D5')
    assert output['edges'] == [[1, 2], [2, 3], [2, 4], [3, 5], [4, 5], [5, 6], [6, 7]]
    assert output['nodes'][1] == {'number': 2, 'members': ['M_1', 'M_2']}
    file = here/'hasse.dot'
    try:
        (code, _) = report('hasse', '--catalog', 'D7', '--dot', str(file))
        assert code == 0
        source = file.read_text(encoding='utf-8')
        assert valid_dot(source)
        assert source.count(' -> ') == 13
    finally:
        file.unlink(missing_ok=True)


def test_compact():
    output = results('compact', '--catalog', 'D5')
    assert output['compact']
    assert output['witness'] == 'M_2'
    assert output['minimum'] == ['x^2', 'x*y', 'y^2']
    assert output['realization'] == ['M_1']
    assert output['jacobian']
    assert output['cln'] == {'exponent': 1, 'witness': 'M_2'}


def test_cln():
    output = results('cln', '--catalog', 'D7', '--n', '2', '--check-transitivity')
    assert output['n'] == 2
    assert output['closed_sets'] == 4
    points = {entry['name']: entry for entry in output['points']}
    assert points['M_3']['cl_n'] == ['M_1', 'M_2', 'M_3', 'M_4', 'X_2', 'X_3', 'X_4']
    assert 'X_0' not in points['X_1']['closed_hull']
    assert not output['transitive']
    triples = [(f['N']['name'], f['M']['name'], f['L']['name'])
               for f in output['failures']]
    assert ('M_3', 'M_1', 'X_1') in triples
    assert output['compact']['witness'] == 'X_4'
    output = results('cln', '--catalog', 'D5', '--n', '1')
    assert output['closed_sets'] == 7
    assert 'failures' not in output
    (code, _) = report('cln', '--catalog', 'D5', '--n', '0')
    assert code == 2


def test_knorrer():
    output = results('knorrer', '--catalog', 'A0:3')
    assert output['potential'] == 'y^4 + z^2'
    assert output['isomorphic']
    assert output['classes'] == [3, 3]
    assert {'from': ['y'], 'to': ['y', 'z']} in output['relabeling']
    assert {'from': ['1'], 'to': ['1']} in output['relabeling']
    output = results('knorrer', '--catalog', 'A0:1', '--variable', 'w')
    assert output['variable'] == 'w'
    assert output['potential'] == 'y^2 + w^2'


def test_document():
    mfs = factorizations_d_odd(5)
    content = dump_document(mfs)
    assert content['potential'] == 'x^2*y + y^4'
    assert dump_document(mfs, 'D5 by hand')['provenance'] == 'D5 by hand'
    file = write('D5.json', content)
    try:
        points = load_document(file)
        assert [point.label for point in points] == [mf.label for mf in mfs]
        (code, text) = report('space', '--file', str(file))
        assert code == 0
        from_file = json.loads(text)
        (code, text) = report('space', '--catalog', 'D5')
        from_catalog = json.loads(text)
        assert from_file['results'] == from_catalog['results']
        assert from_file['input']['digest'] == from_catalog['input']['digest']
        assert from_file['input']['source'] != from_catalog['input']['source']
    finally:
        file.unlink()
    assert digest({'b': 1, 'a': 2}) == digest({'a': 2, 'b': 1})
    with logging_disabled():
        with raises(ValueError):
            dump_document([])
        with raises(FileNotFoundError):
            load_document(here/'missing.json')


def test_exit():
    process = run_stann('--version')
    assert process.returncode == 0
    assert process.stdout.startswith('StAnn')
    assert run_stann().returncode == 2
    assert run_stann('space').returncode == 2
    assert run_stann('space', '--catalog', 'D6').returncode == 2
    assert run_stann('space', '--catalog', 'D5', '--file', 'x.json').returncode == 2
    process = run_stann('space', '--file', 'tests/missing.json')
    assert process.returncode == 2
    assert 'missing.json' in process.stderr
    assert report('space', '--catalog', 'D5', '--workers', '0')[0] == 2
    assert report('space', '--catalog', 'D5', '--workers', '-3')[0] == 2
    assert report('space', '--catalog', 'D5', '--workers', 'many')[0] == 2
    process = run_stann('space', '--catalog', 'D5', '--workers', '0')
    assert process.returncode == 2
    assert 'worker' in process.stderr


def test_exit_invalid():
    files = []
    try:
        files.append(write('broken.json', document(module('bad', [['y']], [['y']]))))
        process = run_stann('verify', '--file', 'tests/broken.json')
        assert process.returncode == 1
        assert 'entry (0, 0)' in process.stderr
        assert 'broken.json' in process.stderr
        files.append(write('empty.json', document()))
        assert run_stann('space', '--file', 'tests/empty.json').returncode == 2
        with logging_disabled():
            with raises(ValueError, match='no modules'):
                load_document(files[-1])
        files.append(write('invalid.json', '{"ring": '))
        process = run_stann('space', '--file', 'tests/invalid.json')
        assert process.returncode == 1
        assert 'Invalid JSON' in process.stderr
        twice = module('M', [['y']], [['y^2']])
        files.append(write('twice.json', document(twice, twice)))
        process = run_stann('space', '--file', 'tests/twice.json')
        assert process.returncode == 1
        assert 'Duplicate' in process.stderr
    finally:
        for file in files:
            file.unlink(missing_ok=True)


def test_dot_unwritable():
    target = here/'missing'/'hasse.dot'
    (code, text) = report('hasse', '--catalog', 'D5', '--dot', str(target))
    assert code == 1
    assert not target.exists()
    process = run_stann('hasse', '--catalog', 'D5', '--dot', 'tests/missing/hasse.dot')
    assert process.returncode == 1
    assert 'Cannot write diagram' in process.stderr
    assert 'Traceback' not in process.stderr


def test_determinism():
    arguments = ('hasse', '--catalog', 'E7')
    (first, second) = (run_stann(*arguments), run_stann(*arguments))
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    assert json.loads(first.stdout)['results']['edges']


########################################
# Main                                 #
########################################

if __name__ == '__main__':
    setup_logging()
    test_verify()
    test_annihilate()
    test_space()
    test_hasse()
    test_compact()
    test_cln()
    test_knorrer()
    test_document()
    test_exit()
    test_exit_invalid()
    test_dot_unwritable()
    test_determinism()
