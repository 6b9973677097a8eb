from .document import parse_problem, serialize_problem
from .gml import h1_to_gml, network_to_gml
from ..errors import ParseError


def read_problem(path):
    """Read a problem document from `path` (UTF-8). See :func:`~adjcut.io.document.parse_problem`.

    Raises :class:`~adjcut.errors.ParseError` when the file does not decode as UTF-8.
    """
    try:
        with open(path, encoding='utf-8') as f:
            text = f.read()
    except UnicodeDecodeError as err:
        raise ParseError('file is not valid UTF-8 (byte 0x{0:02x} at offset {1})'
                         .format(err.object[err.start], err.start)) from err
    return parse_problem(text)


def write_problem(p, path):
    """Write the canonical document of `p` to `path`."""
    with open(path, 'w', encoding='utf-8') as f:
        f.write(serialize_problem(p))
