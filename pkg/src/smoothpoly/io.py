"""File formats: polytopes, cones and fans as JSON objects, classifications as JSON lines.

Record streams skip blank lines and lines starting with ``#``; malformed
input raises ``FormatError`` carrying the offending line number.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .cones import Fan, RationalCone
from .polytope import LatticePolytope


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<input>"):
        self.line = line
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


def _int_rows(obj, what):
    if not isinstance(obj, list) or not all(
        isinstance(r, list) and r and all(isinstance(x, int) and not isinstance(x, bool) for x in r) for r in obj
    ):
        raise ValueError(f"{what} must be a list of integer arrays")
    return [tuple(r) for r in obj]


def polytope_from_obj(obj) -> LatticePolytope:
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise ValueError("expected an object with 'vertices'")
    verts = _int_rows(obj["vertices"], "vertices")
    dim = obj.get("dim", len(verts[0]) if verts else 0)
    if any(len(v) != dim for v in verts):
        raise ValueError(f"vertices must all have length dim={dim}")
    return LatticePolytope(verts)


def polytope_to_obj(p: LatticePolytope) -> dict:
    return {"dim": p.ambient_dim, "vertices": [list(v) for v in sorted(p.vertices)]}


def fan_from_obj(obj) -> Fan:
    if not isinstance(obj, dict) or "rays" not in obj or "cones" not in obj:
        raise ValueError("expected an object with 'rays' and 'cones'")
    return Fan(_int_rows(obj["rays"], "rays"), _int_rows(obj["cones"], "cones"))


def fan_to_obj(f: Fan) -> dict:
    return {"rays": [list(r) for r in f.rays], "cones": [list(c) for c in f.cones]}


def cone_from_obj(obj) -> RationalCone:
    if not isinstance(obj, dict) or "generators" not in obj:
        raise ValueError("expected an object with 'generators'")
    return RationalCone(_int_rows(obj["generators"], "generators"))


def dumps(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def iter_json_lines(text: str, source: str = "<input>"):
    """Yield ``(line number, object)`` for every record line."""
    for n, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            yield n, json.loads(s)
        except json.JSONDecodeError as e:
            raise FormatError(f"invalid JSON ({e.msg})", n, source) from None


def read_records(text: str, parse, source: str = "<input>") -> list:
    """Parse every record with ``parse``; a single JSON document (object or array) is also accepted."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        doc = None
    if isinstance(doc, (list, dict)):
        out = []
        for i, obj in enumerate(doc if isinstance(doc, list) else [doc]):
            try:
                out.append(parse(obj))
            except (ValueError, TypeError) as e:
                raise FormatError(f"record {i}: {e}", None, source) from None
        return out
    out = []
    for n, obj in iter_json_lines(text, source):
        try:
            out.append(parse(obj))
        except (ValueError, TypeError) as e:
            raise FormatError(str(e), n, source) from None
    return out


def read_polytopes(path) -> list[LatticePolytope]:
    path = Path(path)
    return read_records(path.read_text(encoding="utf-8"), polytope_from_obj, str(path))


def read_fans(path) -> list[Fan]:
    path = Path(path)
    return read_records(path.read_text(encoding="utf-8"), fan_from_obj, str(path))


def read_cones(path) -> list[RationalCone]:
    path = Path(path)
    return read_records(path.read_text(encoding="utf-8"), cone_from_obj, str(path))


def form_id(dim: int, vertices) -> str:
    """Stable identifier of a canonical form."""
    payload = json.dumps([dim, [list(v) for v in vertices]], separators=(",", ":"))
    return hashlib.sha1(payload.encode()).hexdigest()[:16]


@dataclass
class ClassRecord:
    id: str
    dim: int
    num_vertices: int
    num_lattice_points: int
    vertices: list
    source_fan: str | None = None
    flags: dict = field(default_factory=dict)

    def sort_key(self):
        return (self.num_lattice_points, self.num_vertices, self.id)

    def to_line(self) -> str:
        return dumps(asdict(self))

    @classmethod
    def from_obj(cls, obj) -> "ClassRecord":
        if not isinstance(obj, dict):
            raise ValueError("expected a record object")
        try:
            rec = cls(**obj)
        except TypeError as e:
            raise ValueError(str(e)) from None
        rec.vertices = [list(v) for v in rec.vertices]
        return rec


def write_records(records, path=None, header: str | None = None) -> str:
    lines = [f"# {header}"] if header else []
    lines += [r.to_line() for r in sorted(records, key=ClassRecord.sort_key)]
    text = "\n".join(lines) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def read_class_records(path) -> list[ClassRecord]:
    path = Path(path)
    return read_records(path.read_text(encoding="utf-8"), ClassRecord.from_obj, str(path))
