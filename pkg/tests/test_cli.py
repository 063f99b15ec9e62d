# ExMat - Python package for matroid base exchange.

from __future__ import absolute_import

import io
import json

import pytest

import exmat as em
from exmat.cli import main, validate_document
from exmat.utils.data_utils import canonical_json, input_digest

K4_DOC = em.complete_graph(4).to_dict()
U23_DOC = {'type': 'uniform', 'rank': 2, 'ground': ['a', 'b', 'c']}
U24_DOC = {'type': 'uniform', 'rank': 2, 'ground': ['a', 'b', 'c', 'd']}
K4_BASES = ['--b0', '12,23,34', '--b1', '13,24,14']

@pytest.fixture
def write_json(tmp_path):
    def write(name, doc):
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return str(path)
    return write

def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    out = json.loads(captured.out) if captured.out else None
    return code, out, captured.err

# exchange commands

@pytest.mark.cli
def test_symmetric_k4(capsys, write_json):
    path = write_json('k4.json', K4_DOC)
    code, out, _ = run(capsys, ['symmetric', path] + K4_BASES + ['--x', '12,23'])
    assert code == 0
    assert out['command'] == 'symmetric'
    assert out['valid'] is True
    assert out['certificates'][0]['Y'] == ['13', '24']
    assert out['input_digest'] == input_digest(K4_DOC)
    assert out['arguments'] == {'b0': ['12', '23', '34'], 'b1': ['13', '14', '24'], 'x': ['12', '23']}

@pytest.mark.cli
def test_canonical_output(capsys, write_json):
    path = write_json('k4.json', K4_DOC)
    main(['symmetric', path] + K4_BASES + ['--x', '12'])
    text = capsys.readouterr().out
    assert text.endswith('\n')
    assert text == canonical_json(json.loads(text)) + '\n'

@pytest.mark.cli
def test_partition(capsys, write_json):
    path = write_json('k4.json', K4_DOC)
    code, out, _ = run(capsys, ['partition', path] + K4_BASES + ['--classes', '12;23;34'])
    assert code == 0 and out['valid']
    classes = out['certificates'][0]['classes']
    assert [c['X'] for c in classes] == [['12'], ['23'], ['34']]
    assert sorted(y for c in classes for y in c['Y']) == ['13', '14', '24']

@pytest.mark.cli
def test_partition_last_large(capsys, write_json):
    path = write_json('k4.json', K4_DOC)
    code, out, _ = run(capsys, ['partition', path] + K4_BASES + ['--classes', '12;23,34', '--last-large'])
    assert code == 0 and out['valid']
    assert out['arguments']['last_large'] is True

@pytest.mark.cli
def test_serial(capsys, write_json):
    path = write_json('u24.json', U24_DOC)
    code, out, _ = run(capsys, ['serial', path, '--b0', 'a,b', '--b1', 'c,d'])
    assert code == 0 and out['valid']
    order = out['certificates'][0]
    assert order['e_seq'] == ['a', 'b']
    assert sorted(order['f_seq']) == ['c', 'd']

@pytest.mark.cli
def test_bijection(capsys, write_json):
    path = write_json('u23.json', U23_DOC)
    code, out, _ = run(capsys, ['bijection', path, '--b0', 'a,b', '--b1', 'b,c', '--max-size', '2'])
    assert code == 0 and out['valid']
    assert out['certificates'] == [{'I': [], 'F': []}, {'I': ['a'], 'F': ['c']},
                                   {'I': ['b'], 'F': ['b']}, {'I': ['a', 'b'], 'F': ['b', 'c']}]

# other commands

@pytest.mark.cli
def test_check_axioms(capsys, write_json):
    code, out, _ = run(capsys, ['check-axioms', write_json('u24.json', U24_DOC)])
    assert code == 0
    assert out['valid'] is True
    assert out['certificates'][0]['holds']

@pytest.mark.cli
def test_check_axioms_non_matroid(capsys, write_json):
    doc = {'type': 'explicit', 'ground': ['a', 'b'], 'independent': [[], ['a', 'b']]}
    code, out, _ = run(capsys, ['check-axioms', write_json('bad.json', doc)])
    assert code == 4
    assert out['valid'] is False

@pytest.mark.cli
def test_verify_counterexample(capsys):
    code, out, _ = run(capsys, ['verify-counterexample', '--n', '12', '--k', '2'])
    assert code == 0
    assert out['valid'] is True
    report = out['certificates'][0]
    assert report['forced_s0'] == ['e0', 'e1']
    assert report['forced_s1'] == ['h0', 'h1']
    assert report['component_count'] == 2
    assert out['input_digest'] == input_digest({'n': 12, 'k': 2})

@pytest.mark.cli
def test_verify_counterexample_range(capsys):
    code, out, err = run(capsys, ['verify-counterexample', '--n', '8', '--k', '7'])
    assert code == 3
    assert out is None
    assert 'k must be between' in err

@pytest.mark.cli
def test_generate(capsys, monkeypatch):
    monkeypatch.setenv('EXMAT_SEED', '5')
    code, out, _ = run(capsys, ['generate', '--kind', 'gf2', '--size', '5'])
    assert code == 0
    assert out == em.random_instance('gf2', 5, 5).to_dict()

    code, out, _ = run(capsys, ['generate', '--kind', 'graphic', '--size', '4', '--seed', '3', '--edge-prob', '1.0'])
    assert code == 0
    assert len(out['edges']) == 4

@pytest.mark.cli
def test_generate_bad_seed(capsys, monkeypatch):
    monkeypatch.setenv('EXMAT_SEED', 'abc')
    code, _, err = run(capsys, ['generate', '--kind', 'uniform', '--size', '3'])
    assert code == 2
    assert 'EXMAT_SEED' in err

@pytest.mark.cli
def test_oracle_commands(capsys, write_json):
    u24 = write_json('u24.json', U24_DOC)
    code, out, _ = run(capsys, ['oracle', 'all-bases', u24])
    assert code == 0 and out['valid']
    assert len(out['certificates'][0]['bases']) == 6

    code, out, _ = run(capsys, ['oracle', 'exchange-search', u24, '--b0', 'a,b', '--b1', 'c,d', '--x', 'a'])
    assert code == 0 and out['valid']
    assert out['certificates'][0]['Y'] == [['c'], ['d']]

    u23 = write_json('u23.json', U23_DOC)
    code, out, _ = run(capsys, ['oracle', 'bijection-search', u23, '--b0', 'a,b', '--b1', 'b,c', '--k', '1'])
    assert code == 0 and out['valid']
    assert out['certificates'][0] == {'exists': True, 'solution': [{'I': ['a'], 'F': ['c']},
                                                                   {'I': ['b'], 'F': ['b']}]}

# inputs and errors

@pytest.mark.cli
def test_not_a_basis(capsys, write_json):
    path = write_json('k4.json', K4_DOC)
    code, out, err = run(capsys, ['symmetric', path, '--b0', '12,23,34', '--b1', '13,24', '--x', '12'])
    assert code == 3
    assert out is None
    assert 'b1 is not a basis' in err

@pytest.mark.cli
def test_unknown_label(capsys, write_json):
    path = write_json('k4.json', K4_DOC)
    code, _, err = run(capsys, ['symmetric', path] + K4_BASES + ['--x', '99'])
    assert code == 3
    assert 'unknown label' in err

@pytest.mark.cli
def test_bad_json(capsys, tmp_path):
    path = tmp_path / 'bad.json'
    path.write_text('{"type": "uniform",')
    code, out, err = run(capsys, ['check-axioms', str(path)])
    assert code == 2
    assert out is None
    assert 'invalid JSON' in err

@pytest.mark.cli
def test_bad_document(capsys, write_json):
    code, _, _ = run(capsys, ['check-axioms', write_json('bad.json', {'type': 'uniform', 'rank': 1})])
    assert code == 2
    code, _, _ = run(capsys, ['check-axioms', 'does-not-exist.json'])
    assert code == 2

@pytest.mark.cli
def test_missing_bases(capsys, write_json):
    code, _, err = run(capsys, ['serial', write_json('k4.json', K4_DOC), '--b0', '12,23,34'])
    assert code == 2
    assert 'both bases' in err

@pytest.mark.cli
def test_usage_error(capsys):
    assert main(['symmetric']) == 2
    assert main([]) == 2
    capsys.readouterr()

@pytest.mark.cli
def test_sidecar_bases(capsys, write_json):
    path = write_json('k4.json', K4_DOC)
    bases = write_json('bases.json', {'b0': ['12', '23', '34'], 'b1': ['13', '24', '14']})
    code, out, _ = run(capsys, ['symmetric', path, '--bases', bases, '--x', '12,23'])
    assert code == 0
    assert out['certificates'][0]['Y'] == ['13', '24']

    # the command line takes precedence over the sidecar
    code, out, _ = run(capsys, ['serial', path, '--bases', bases, '--b1', '12,23,34'])
    assert code == 0
    assert out['arguments']['b1'] == ['12', '23', '34']

@pytest.mark.cli
def test_stdin(capsys, monkeypatch):
    monkeypatch.setattr('sys.stdin', io.StringIO(json.dumps(U24_DOC)))
    code, out, _ = run(capsys, ['check-axioms', '-'])
    assert code == 0 and out['valid']

@pytest.mark.cli
def test_output_file(capsys, tmp_path, write_json):
    out_path = tmp_path / 'result.json'
    code = main(['check-axioms', write_json('u24.json', U24_DOC), '--output', str(out_path)])
    assert code == 0
    assert capsys.readouterr().out == ''
    text = out_path.read_text()
    assert json.loads(text)['valid'] is True
    assert text == canonical_json(json.loads(text)) + '\n'

@pytest.mark.cli
def test_verbose(capsys, write_json):
    path = write_json('k4.json', K4_DOC)
    code, _, err = run(capsys, ['symmetric', path] + K4_BASES + ['--x', '12', '--verbose'])
    assert code == 0
    assert 'Finished symmetric' in err

# validation of stored documents

@pytest.mark.cli
def test_validate_document_tampering():
    m = em.matroid_from_dict(K4_DOC)
    doc = em.cli.cmd_symmetric(K4_DOC, ['12', '23', '34'], ['13', '24', '14'], ['12', '23'])
    assert doc['valid']

    doc = json.loads(canonical_json(doc))
    assert validate_document(doc, m)['valid']

    doc['certificates'][0]['Y'] = ['14', '24']
    assert not validate_document(doc, m)['valid']

    del doc['certificates'][0]['Y']
    assert not validate_document(doc, m)['valid']

@pytest.mark.cli
def test_validate_document_counterexample():
    doc = json.loads(canonical_json(em.cli.cmd_verify_counterexample(8, 2)))
    assert validate_document(doc)['valid']
    doc['certificates'][0]['candidates'][0]['s1'].remove('h0')
    assert not validate_document(doc)['valid']
