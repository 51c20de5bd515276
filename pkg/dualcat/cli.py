"""
Command line interface.

Usage::

    dualcat [-v] [--json] [--max-degree N] <command> INPUT ...

``INPUT`` is a JSON file holding a category (``objects`` key) or a simplicial
complex (``vertices`` key), or a generator pseudo-path such as
``gen:building_gl(3,2)``. Mathematical verdicts always exit with status 0;
malformed input exits with 1, validation and certification failures with 2 and
internal consistency failures with 3.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Union

# pylint: disable=import-error
from tabulate import tabulate  # type: ignore

from dualcat.categories import FiniteCategory, is_poset, load_category
from dualcat.certificates import (
    DualityCertificate,
    certify_generic,
    certify_simplicial,
    is_constant_module,
    orientability,
    poincare_report,
)
from dualcat.complexes import (
    SimplicialComplex,
    category_local_cohomology,
    closure_objects,
    cohomology,
    homology_groups,
    load_complex,
    local_cohomology,
    object_faces,
    reduced_cohomology,
    relative_cohomology,
)
from dualcat.errors import (
    CertificationError,
    ComputationError,
    InputError,
    ValidationError,
)
from dualcat.integral import FgAbelianGroup
from dualcat.modules import GradedGroups, constant_module, ext, tor
from dualcat.values import Method, Variance
from dualcat.zoo import generate

LOGGER = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"

Input = Union[FiniteCategory, SimplicialComplex]


class _Parser(argparse.ArgumentParser):
    """Argument parser raising :class:`InputError` instead of exiting."""

    def error(self, message: str):
        raise InputError(message)


@dataclass(frozen=True)
class RunConfig:
    """Parsed command line."""

    command: str
    source: str
    output: str = "text"
    verbosity: int = 0
    max_degree: Optional[int] = None
    reduced: bool = False
    relative: Optional[str] = None
    simplex: Optional[str] = None
    method: str = "all"
    cross_check: bool = False

    @classmethod
    def from_namespace(cls, namespace: argparse.Namespace) -> "RunConfig":
        """Build a configuration from parsed arguments."""
        max_degree = getattr(namespace, "max_degree", None)
        if max_degree is not None and max_degree < 0:
            raise InputError(f"--max-degree must be non-negative, got {max_degree}")
        return cls(
            command=namespace.command,
            source=namespace.source,
            output="json" if getattr(namespace, "json", False) else "text",
            verbosity=getattr(namespace, "verbose", 0),
            max_degree=max_degree,
            reduced=getattr(namespace, "reduced", False),
            relative=getattr(namespace, "relative", None),
            simplex=getattr(namespace, "simplex", None),
            method=getattr(namespace, "method", "all"),
            cross_check=getattr(namespace, "cross_check", False),
        )

    @property
    def json(self) -> bool:
        """Return :data:`True <python:True>` for JSON output."""
        return self.output == "json"


def build_parser() -> argparse.ArgumentParser:
    """Return the command line parser."""
    common = _Parser(add_help=False)
    common.add_argument(
        "-v", "--verbose", action="count", default=argparse.SUPPRESS, help="log more"
    )
    common.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS, help="output JSON"
    )
    common.add_argument(
        "--max-degree",
        type=int,
        default=argparse.SUPPRESS,
        metavar="N",
        help="highest reported degree",
    )
    parser = _Parser(
        prog="dualcat",
        description="Homological duality of finite categories and complexes.",
        parents=[common],
    )
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        command = commands.add_parser(name, help=help_text, parents=[common])
        command.add_argument(
            "source", metavar="INPUT", help="JSON file or gen:name(params)"
        )
        return command

    add("validate", "validate a category or complex")
    add("gen", "print a generated category or complex as JSON")
    homology = add("homology", "cohomology and homology tables")
    homology.add_argument("--reduced", action="store_true", help="reduced groups")
    homology.add_argument(
        "--relative", metavar="SEL", help="objects or faces of the subcategory"
    )
    local = add("local", "local cohomology at a face or an object")
    local.add_argument(
        "--simplex", metavar="LIST", required=True, help="v1,v2 or v1+v2"
    )
    local.add_argument(
        "--method", choices=["link", "pair", "ext", "all"], default="all"
    )
    certify = add("certify", "duality category certificate")
    certify.add_argument(
        "--cross-check", action="store_true", help="compare with the generic criterion"
    )
    add("poincare", "Poincare duality table of an orientable complex")
    return parser


def load_input(source: str) -> Input:
    """
    Load a category or a complex from a file or a generator pseudo-path.

    Raises
    ------
        InputError
            If the input kind cannot be detected or is malformed.
        OSError
            If the file cannot be read.
    """
    if source.startswith("gen:"):
        return generate(source)
    with open(source, "r") as stream:
        data = json.load(stream)
    if not isinstance(data, Mapping):
        raise InputError("the input must be a JSON object")
    if "objects" in data:
        return load_category(data)
    if "vertices" in data:
        return load_complex(data)
    raise InputError("cannot detect the input kind: expected 'objects' or 'vertices'")


def _dump(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2)


def _truncated(groups: GradedGroups, max_degree: Optional[int]) -> GradedGroups:
    if max_degree is None:
        return groups
    return GradedGroups(
        {degree: groups[degree] for degree in groups if degree <= max_degree}
    )


def _graded_table(columns: Mapping[str, GradedGroups]) -> str:
    degrees = sorted({degree for groups in columns.values() for degree in groups})
    rows = [
        [degree] + [str(groups[degree]) for groups in columns.values()]
        for degree in degrees
    ]
    return tabulate(rows, headers=["degree", *columns])


def _reduce(groups: GradedGroups) -> GradedGroups:
    values = {degree: groups[degree] for degree in groups}
    if 0 in values:
        values[0] = FgAbelianGroup(values[0].rank - 1, values[0].torsion)
    return GradedGroups(values)


def cmd_validate(config: RunConfig) -> str:
    """Validate the input and summarize it."""
    value = load_input(config.source)
    if isinstance(value, FiniteCategory):
        summary: Dict[str, Any] = {
            "kind": "category",
            "objects": len(value.objects),
            "morphisms": len(value.morphisms),
            "poset": is_poset(value),
        }
    else:
        summary = {
            "kind": "complex",
            "vertices": len(value.vertices),
            "dimension": value.dimension,
            "f_vector": value.f_vector(),
        }
    summary["valid"] = True
    if config.json:
        return _dump(summary)
    return tabulate(sorted(summary.items()), headers=["property", "value"])


def cmd_gen(config: RunConfig) -> str:
    """Print a generated input as JSON."""
    if not config.source.startswith("gen:"):
        raise InputError(f"expected a gen: pseudo-path, got {config.source!r}")
    return _dump(load_input(config.source).to_json())


def cmd_homology(config: RunConfig) -> str:
    """Print cohomology and homology tables."""
    value = load_input(config.source)
    columns: Dict[str, GradedGroups] = {}
    if isinstance(value, SimplicialComplex):
        if config.relative is not None:
            objects = closure_objects(value, object_faces(value, config.relative))
            columns["cohomology"] = relative_cohomology(value.face_poset(), objects)
        elif config.reduced:
            columns["cohomology"] = reduced_cohomology(value)
            columns["homology"] = homology_groups(value, reduced=True)
        else:
            columns["cohomology"] = cohomology(value)
            columns["homology"] = homology_groups(value)
    elif config.relative is not None:
        objects = [name.strip() for name in config.relative.split(",") if name.strip()]
        columns["cohomology"] = relative_cohomology(value, objects)
    else:
        columns["cohomology"] = ext(
            value, None, constant_module(value), config.max_degree
        )
        columns["homology"] = tor(
            value, constant_module(value, Variance.RIGHT), None, config.max_degree
        )
        if config.reduced and value.objects:
            columns = {name: _reduce(groups) for name, groups in columns.items()}
    columns = {
        name: _truncated(groups, config.max_degree) for name, groups in columns.items()
    }
    if config.json:
        return _dump({name: groups.to_json() for name, groups in columns.items()})
    return _graded_table(columns)


def _methods(selector: str) -> List[Method]:
    if selector == "all":
        return list(Method)
    return [Method.parse(selector)]


def cmd_local(config: RunConfig) -> str:
    """Print local cohomology tables per method."""
    if config.simplex is None:
        raise InputError("--simplex is required")
    value = load_input(config.source)
    results: Dict[str, GradedGroups] = {}
    if isinstance(value, SimplicialComplex):
        name = value.face_id(value.parse_face(config.simplex))
        for method in _methods(config.method):
            results[method.value] = local_cohomology(value, name, method)
    else:
        name = value.check_object(config.simplex.strip())
        if config.method == "all":
            methods = [Method.EXT] + ([Method.PAIR] if is_poset(value) else [])
        else:
            methods = _methods(config.method)
        for method in methods:
            results[method.value] = category_local_cohomology(value, name, method)
    results = {
        method: _truncated(groups, config.max_degree)
        for method, groups in results.items()
    }
    agree = len(set(results.values())) == 1
    if not agree:
        LOGGER.warning("local cohomology methods disagree at %s", name)
    if config.json:
        return _dump(
            {
                "face": name,
                "methods": {
                    method: groups.to_json() for method, groups in results.items()
                },
                "agree": agree,
            }
        )
    table = _graded_table(results)
    if len(results) > 1:
        table += f"\nmethods agree: {'yes' if agree else 'no'}"
    return table


def _manifold_section(value: Input, certificate: DualityCertificate) -> Optional[dict]:
    dualizing = certificate.dualizing
    if dualizing is None or any(
        group != FgAbelianGroup.free(1) for group in certificate.values().values()
    ):
        return None
    section: Dict[str, Any] = {"constant": is_constant_module(dualizing).constant}
    if isinstance(value, SimplicialComplex):
        report = orientability(value, certificate)
        section["orientable"] = report.orientable
        section["top_homology"] = str(report.top_homology)
    return section


def cmd_certify(config: RunConfig) -> str:
    """Print a duality certificate."""
    value = load_input(config.source)
    if isinstance(value, SimplicialComplex):
        certificate = certify_simplicial(value, cross_check=config.cross_check)
    else:
        certificate = certify_generic(value)
    data = certificate.to_json()
    manifold = _manifold_section(value, certificate)
    if manifold is not None:
        data["manifold"] = manifold
    if config.json:
        return _dump(data)
    rows: List[Sequence[Any]] = [
        ("verdict", data["verdict"]),
        ("degree", data["degree"]),
        ("kind", data["kind"]),
        ("pointwise free", data["pointwise_free"]),
    ]
    rows.extend(
        (f"check {name}", status) for name, status in sorted(data["checks"].items())
    )
    rows.extend(
        (f"manifold {name}", entry) for name, entry in sorted((manifold or {}).items())
    )
    rows.extend(
        ("witness", json.dumps(witness, sort_keys=True))
        for witness in data["witnesses"]
    )
    parts = [tabulate(rows, headers=["property", "value"])]
    if certificate.degree is not None:
        parts.append(
            tabulate(
                [(obj, str(group)) for obj, group in certificate.values().items()],
                headers=["object", f"D^{certificate.degree}"],
            )
        )
    return "\n\n".join(parts)


def cmd_poincare(config: RunConfig) -> str:
    """Print the Poincare duality table of an orientable complex."""
    value = load_input(config.source)
    if not isinstance(value, SimplicialComplex):
        raise InputError("poincare needs a simplicial complex")
    rows = poincare_report(value)
    if config.json:
        return _dump(
            {
                "degree": value.dimension if not rows else rows[-1].degree,
                "rows": [
                    {
                        "degree": row.degree,
                        "homology": row.homology.to_json(),
                        "cohomology": row.cohomology.to_json(),
                        "match": row.match,
                    }
                    for row in rows
                ],
            }
        )
    degree = rows[-1].degree if rows else 0
    return tabulate(
        [
            (row.degree, str(row.homology), str(row.cohomology), row.match)
            for row in rows
        ],
        headers=["i", "H_i", f"H^({degree}-i)", "match"],
    )


COMMANDS: Dict[str, Callable[[RunConfig], str]] = {
    "validate": cmd_validate,
    "gen": cmd_gen,
    "homology": cmd_homology,
    "local": cmd_local,
    "certify": cmd_certify,
    "poincare": cmd_poincare,
}


def _fail(error: Exception, status: int) -> int:
    print(f"error: {error}", file=sys.stderr)
    return status


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the command line interface.

    Returns
    -------
        int
            The exit status.
    """
    try:
        config = RunConfig.from_namespace(build_parser().parse_args(argv))
    except InputError as error:
        return _fail(error, 1)
    level = {0: logging.WARNING, 1: logging.INFO}.get(config.verbosity, logging.DEBUG)
    logging.basicConfig(level=level, format=LOG_FORMAT)
    try:
        output = COMMANDS[config.command](config)
    except (InputError, json.JSONDecodeError, OSError) as error:
        return _fail(error, 1)
    except (ValidationError, CertificationError) as error:
        return _fail(error, 2)
    except ComputationError as error:
        LOGGER.exception("internal consistency failure")
        return _fail(error, 3)
    print(output)
    return 0
