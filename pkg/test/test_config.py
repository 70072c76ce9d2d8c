"""
Tests for reading structure configuration files.
"""

import os
from fractions import Fraction

import pytest

from comprelie.config import StructureConfig
from comprelie.polyx import FamilySpec
from comprelie.structures import tvf_structure
from comprelie.errors import ConfigError
from .test_utils import (
    ctx2, write_config, fliess_map, fliess_config, counterexample_config,
    g1_config, g3_config
)



def assert_config_error(text, message, line=None):
    with pytest.raises(ConfigError) as error:
        StructureConfig.parse(text, 'broken.conf')
    assert message in str(error.value), str(error.value)
    assert error.value.path == 'broken.conf'
    assert error.value.line == line
    return error.value



def test_parse_tvf():
    config = StructureConfig.parse(fliess_config)
    assert config.kind == 'tvf'
    assert config.dim == 2
    assert config.rows == {0: [0, 0], 1: [1, 0]}
    s = config.structure()
    x1x0 = ctx2.word(1, 0)
    assert s.prelie(x1x0, ctx2.letter(0)) == tvf_structure(fliess_map()).prelie(x1x0, ctx2.letter(0))

def test_parse_tvfl():
    config = StructureConfig.parse(counterexample_config)
    assert config.form == [0, 1]
    assert config.lam == 1
    assert config.structure().name == 'T(V,f,lambda)'

def test_parse_families():
    config = StructureConfig.parse(g1_config)
    assert config.family_spec() == FamilySpec.g1(1, 1, 1, 1)
    config = StructureConfig.parse(g3_config)
    assert config.family_spec() == FamilySpec.g3(1, 2, 1)
    config = StructureConfig.parse('kind = kx_family\nfamily = G4\n')
    assert config.family_spec() == FamilySpec.g4(0)
    config = StructureConfig.parse('kind=kx_family\nfamily=GPrime\nlambda=2/3\nmu=-1/2')
    assert config.family_spec() == FamilySpec.gprime(Fraction(2, 3), Fraction(-1, 2))

def test_parse_star_and_sfl():
    config = StructureConfig.parse('kind = tvstar\ndim = 2\nstar.1.0 = 0, 1\n')
    assert config.star == {(1, 0): [0, 1]}
    assert config.structure().name == 'T(V,*)'
    config = StructureConfig.parse('kind = sfl\ndim = 3\nform = 1 -1/2 2\nlambda = 3\n')
    assert config.form == [1, Fraction(-1, 2), 2]
    assert config.structure().name == 'S(V,f,lambda)'

def test_default():
    config = StructureConfig.default()
    assert config.kind == 'tvf'
    assert config.dim == 2
    s = config.structure()
    assert s.prelie(ctx2.word(1, 1), ctx2.letter(0)) == 0



def test_line_errors():
    assert_config_error('kind = tvf\ndim 2\n', 'Expected a "key = value" line.', 2)
    assert_config_error('kind = tvf\ndim = 2\ndim = 3\n', 'Duplicate key "dim".', 3)
    error = assert_config_error('kind = tvf\ndim = 2\nf.0 = 1/0 0\n', 'zero denominator', 3)
    assert str(error).startswith('broken.conf:3: ')
    assert_config_error('kind = tvf\ndim = 2\nf.0 = 1.5 0\n', 'Expected a rational', 3)
    assert_config_error('kind = tvf\ndim = 2\nf.2 = 1 0\n', 'outside dimension 2', 3)
    assert_config_error('kind = tvf\ndim = 2\nf.1 = 1\n', 'needs 2 entries, got 1', 3)
    assert_config_error('kind = tvf\ndim = 0\n', 'must be at least 1', 2)
    assert_config_error('kind = tvf\ndim = two\n', 'must be an integer', 2)
    assert_config_error('\nkind = matrix\n', 'Unknown kind "matrix"', 2)
    assert_config_error('kind = tvf\ndim = 2\nlambda = 1\n', 'does not apply to kind "tvf"', 3)
    assert_config_error('kind = tvstar\ndim = 2\nstar.1 = 0 1\n', 'star.i.j', 3)
    assert_config_error('kind = kx_family\nfamily = G7\n', 'Unknown family "G7"', 2)
    assert_config_error('kind = kx_family\nfamily = G4\nmu = 1\n', 'takes no parameter "mu"', 3)

def test_missing_keys():
    error = assert_config_error('dim = 2\n', 'Missing key "kind".')
    assert str(error) == 'broken.conf: Missing key "kind".'
    assert_config_error('kind = tvf\n', 'needs a "dim" key')
    assert_config_error('kind = tvfl\ndim = 2\n', 'needs a "form" key')
    assert_config_error('kind = kx_family\n', 'needs a "family" key')
    assert_config_error('kind = kx_family\nfamily = G2\nN = 1\n', 'needs the key "mu"')

def test_invalid_structures():
    config = StructureConfig.parse('kind = kx_family\nfamily = G3\nN = 1\nmu = 0\n', 'zero.conf')
    with pytest.raises(ConfigError) as error:
        config.structure()
    assert str(error.value).startswith('zero.conf: Invalid structure: ')
    config = StructureConfig.parse('kind = tvstar\ndim = 2\nstar.0.0 = 0 1\nstar.0.1 = 1 0\n')
    with pytest.raises(ConfigError) as error:
        config.structure()
    assert 'not preLie' in str(error.value)

def test_load():
    path = write_config(g3_config)
    try:
        config = StructureConfig.load(path)
        assert config.path == path
        assert config.family_spec() == FamilySpec.g3(1, 2, 1)
    finally:
        os.remove(path)
    with pytest.raises(ConfigError) as error:
        StructureConfig.load(path)
    assert error.value.path == path
    assert 'Unable to read configuration' in str(error.value)



def __main__():
    test_parse_tvf()
    test_parse_tvfl()
    test_parse_families()
    test_parse_star_and_sfl()
    test_default()
    test_line_errors()
    test_missing_keys()
    test_invalid_structures()
    test_load()

if __name__ == '__main__':
    __main__()
