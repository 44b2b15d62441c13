import pytest
import yaml

from irredcount.fields.quadratic import make_field


@pytest.fixture
def field_m5():
    return make_field(-5)


@pytest.fixture
def field_m15():
    return make_field(-15)


@pytest.fixture
def field_m1():
    return make_field(-1)


@pytest.fixture
def field_m2():
    return make_field(-2)


@pytest.fixture
def field_m6():
    # h = 2 without Hilbert class field data
    return make_field(-6)


@pytest.fixture
def write_config(tmp_path):
    def _write(data):
        path = tmp_path / "irredcount.yaml"
        path.write_text(yaml.safe_dump(data))
        return str(path)

    return _write
