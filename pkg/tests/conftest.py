import pytest

from mil.bundled import load_bundled
from mil.field import FieldSpec
from mil.group import SquareMatrix, closure
from mil.invariants import GroupAction
from mil.poly import RingCtx


@pytest.fixture
def f2():
    return FieldSpec(2)


@pytest.fixture
def f3():
    return FieldSpec(3)


@pytest.fixture
def f9():
    """F_9 = F_3[a]/(a^2 + 1); a has order 4"""
    return FieldSpec(3, 2)


@pytest.fixture
def r2(f3):
    return RingCtx(f3, ('x', 'y'))


@pytest.fixture
def r3(f3):
    return RingCtx(f3, ('x', 'y', 'z'))


@pytest.fixture
def symmetric(r3):
    """e1, e2, e3 and delta in F_3[x,y,z]"""
    return {name: r3.parse(text) for name, text in {
        'e1': 'x + y + z',
        'e2': 'x*y + y*z + z*x',
        'e3': 'x*y*z',
        'delta': 'x^2*y + y^2*z + z^2*x',
    }.items()}


@pytest.fixture
def matrix():
    """Build a SquareMatrix from rows of scalar strings"""
    def _matrix(field, rows):
        return SquareMatrix.from_strings(field, rows)
    return _matrix


@pytest.fixture
def action():
    """Close generator rows over `ring` and return the GroupAction"""
    def _action(ring, *generators):
        mats = [SquareMatrix.from_strings(ring.field, g) for g in generators]
        return GroupAction(closure(mats), ring)
    return _action


@pytest.fixture(scope='module')
def s2():
    return load_bundled('s2')


@pytest.fixture(scope='module')
def s2_char2():
    return load_bundled('s2@2')


@pytest.fixture(scope='module')
def a3():
    return load_bundled('a3')


@pytest.fixture(scope='module')
def klein3():
    return load_bundled('klein3')


@pytest.fixture(scope='module')
def klein6():
    return load_bundled('klein6')


@pytest.fixture(scope='module')
def braun():
    return load_bundled('braun')


@pytest.fixture
def clean_env(monkeypatch):
    """Remove every MIL_* setting so defaults apply"""
    for name in ('MIL_PAIR_BUDGET', 'MIL_ORDER_CAP', 'MIL_POWER_BUDGET', 'MIL_WORKERS', 'MIL_LOG_LEVEL'):
        monkeypatch.delenv(name, raising=False)
