import os, sys, copy, subprocess, tempfile

from comprelie.algebra import BialgebraContext, LinMap, LinForm, PreLieConsts
from comprelie.structures import tvf_structure, tvfl_structure, tvstar_structure



repository_path = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

def callcomprelie(args, env=None):
    """
    Run the command-line interface in a subprocess and get its exit
    status, stdout, and stderr.
    """
    environment = dict(os.environ)
    environment.pop('COMPRELIE_CAP', None)
    environment.update(env or {})
    process = subprocess.run(
        [sys.executable, '-m', 'comprelie'] + list(args),
        cwd=repository_path, env=environment,
        stdout=subprocess.PIPE, stderr=subprocess.PIPE
    )
    return (
        process.returncode,
        process.stdout.decode('utf-8'),
        process.stderr.decode('utf-8'),
    )

def write_config(text):
    """Write a configuration to a temporary file and get its path."""
    handle, path = tempfile.mkstemp(suffix='.conf', prefix='comprelie_test_')
    with os.fdopen(handle, 'w') as config_file:
        config_file.write(text)
    return path



ctx1 = BialgebraContext(1)
ctx2 = BialgebraContext(2)
ctx3 = BialgebraContext(3)

def fliess_map():
    """f(x0) = 0 and f(x1) = x0."""
    return LinMap(ctx2, [[0, 0], [1, 0]])

def fliess_structure():
    return tvf_structure(fliess_map())

def counterexample_form():
    """The two-letter form with f(x0) = 0 and f(x1) = 1."""
    return LinForm(ctx2, [0, 1])

def counterexample_structure(lam=1):
    return tvfl_structure(counterexample_form(), lam)

def star_consts():
    """A nonassociative preLie product on two letters: e1 * e0 = e1."""
    return PreLieConsts.from_pairs(ctx2, {(1, 0): [0, 1]})

def star_structure():
    return tvstar_structure(star_consts())

def corrupted(s, prelie):
    """A copy of a structure with its preLie product replaced."""
    broken = copy.copy(s)
    broken.name = s.name + ' (corrupted)'
    broken.prelie = prelie
    return broken

def witness_degree(report):
    return sum(max(a.degree(key) for key in a.terms) for a in report.witness)



fliess_config = """
# T(V,f) with the Fliess operator
kind = tvf
dim = 2
f.0 = 0 0
f.1 = 1 0
"""

counterexample_config = """
kind = tvfl
dim = 2
form = 0, 1
lambda = 1
"""

g1_config = """
kind = kx_family
family = G1
N = 1
lambda = 1
a = 1
b = 1
"""

g3_config = """
kind = kx_family
family = G3
N = 1
lambda = 2
mu = 1
"""
