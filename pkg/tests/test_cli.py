import contextlib
import io
import json
import os
import tempfile
import unittest

from dualcat.categories import FiniteCategory
from dualcat.cli import RunConfig, build_parser, load_input, main
from dualcat.complexes import SimplicialComplex
from dualcat.errors import InputError


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        status = main(list(argv))
    return status, out.getvalue(), err.getvalue()


def run_json(*argv):
    status, out, _ = run("--json", *argv)
    return status, json.loads(out)


def arrow(src, dst):
    return {"id": "f", "src": src, "dst": dst}


class ParserTestCase(unittest.TestCase):
    def test_run_config(self):
        config = RunConfig.from_namespace(
            build_parser().parse_args(["local", "gen:single_edge", "--simplex", "v"])
        )
        self.assertEqual(config.command, "local")
        self.assertEqual(config.output, "text")
        self.assertEqual(config.method, "all")
        self.assertFalse(config.json)
        config = RunConfig.from_namespace(
            build_parser().parse_args(["homology", "--json", "-vv", "gen:klein8"])
        )
        self.assertTrue(config.json)
        self.assertEqual(config.verbosity, 2)

    def test_errors(self):
        with self.assertRaises(InputError):
            build_parser().parse_args(["frobnicate", "gen:klein8"])
        with self.assertRaises(InputError):
            build_parser().parse_args(["local", "gen:klein8"])
        with self.assertRaises(InputError):
            arguments = ["--max-degree", "-2", "homology", "gen:klein8"]
            RunConfig.from_namespace(build_parser().parse_args(arguments))

    def test_load_input(self):
        self.assertIsInstance(load_input("gen:square_poset"), FiniteCategory)
        self.assertIsInstance(load_input("gen:single_edge"), SimplicialComplex)


class CommandTestCase(unittest.TestCase):
    def test_validate(self):
        status, data = run_json("validate", "gen:square_poset")
        self.assertEqual(status, 0)
        self.assertEqual(
            data,
            {
                "kind": "category",
                "morphisms": 4,
                "objects": 4,
                "poset": True,
                "valid": True,
            },
        )
        status, data = run_json("validate", "gen:sphere_boundary(3)")
        self.assertEqual(data["f_vector"], [4, 6, 4])
        self.assertEqual(data["dimension"], 2)
        status, out, _ = run("validate", "gen:parallel_arrows")
        self.assertEqual(status, 0)
        self.assertIn("category", out)

    def test_gen(self):
        status, out, _ = run("gen", "gen:chain_poset(1)")
        self.assertEqual(status, 0)
        self.assertEqual(json.loads(out)["objects"], ["0", "1"])
        status, out, _ = run("gen", "gen:single_edge")
        self.assertEqual(json.loads(out)["vertices"], ["v", "w"])

    def test_homology(self):
        status, data = run_json("homology", "gen:sphere_boundary(2)")
        self.assertEqual(status, 0)
        self.assertEqual(data["cohomology"], {"0": [1, []], "1": [1, []]})
        self.assertEqual(data["homology"], {"0": [1, []], "1": [1, []]})
        _, data = run_json("homology", "--reduced", "gen:sphere_boundary(2)")
        self.assertEqual(data["cohomology"], {"1": [1, []]})
        _, data = run_json("homology", "gen:parallel_arrows")
        self.assertEqual(data["cohomology"], {"0": [1, []], "1": [1, []]})
        _, data = run_json("--max-degree", "0", "homology", "gen:parallel_arrows")
        self.assertEqual(data["homology"], {"0": [1, []]})
        status, out, _ = run("homology", "gen:rp2_6")
        self.assertEqual(status, 0)
        self.assertIn("Z/2", out)

    def test_relative_homology(self):
        _, data = run_json("homology", "--relative", "0", "gen:square_poset")
        self.assertEqual(data["cohomology"], {"1": [1, []]})

    def test_local(self):
        status, data = run_json("local", "gen:single_edge", "--simplex", "v+w")
        self.assertEqual(status, 0)
        self.assertEqual(data["face"], "v+w")
        self.assertTrue(data["agree"])
        self.assertEqual(
            data["methods"],
            {method: {"1": [1, []]} for method in ("link", "pair", "ext")},
        )
        _, data = run_json("local", "gen:square_poset", "--simplex", "0")
        self.assertEqual(sorted(data["methods"]), ["ext", "pair"])
        _, data = run_json("local", "gen:parallel_arrows", "--simplex", "x")
        self.assertEqual(data["methods"], {"ext": {"1": [1, []]}})
        status, out, _ = run("local", "gen:edge_and_vertex", "--simplex", "u")
        self.assertEqual(status, 0)
        self.assertIn("methods agree: yes", out)

    def test_certify(self):
        status, data = run_json("certify", "gen:single_edge")
        self.assertEqual(status, 0)
        self.assertEqual(data["verdict"], "certified")
        self.assertEqual(data["degree"], 1)
        self.assertNotIn("manifold", data)
        _, data = run_json("certify", "gen:parallel_arrows")
        self.assertEqual(data["manifold"], {"constant": True})
        _, data = run_json("certify", "--cross-check", "gen:sphere_boundary(2)")
        self.assertEqual(data["checks"]["criterion_equivalence"], "pass")
        self.assertEqual(
            data["manifold"],
            {"constant": True, "orientable": True, "top_homology": "Z"},
        )
        status, data = run_json("certify", "gen:edge_and_vertex")
        self.assertEqual(status, 0)
        self.assertEqual(data["verdict"], "refuted")
        status, out, _ = run("certify", "gen:five_object")
        self.assertEqual(status, 0)
        self.assertIn("D^1", out)

    def test_poincare(self):
        status, data = run_json("poincare", "gen:sphere_boundary(2)")
        self.assertEqual(status, 0)
        self.assertEqual(data["degree"], 1)
        self.assertTrue(all(row["match"] for row in data["rows"]))
        status, data = run_json("poincare", "gen:sphere_boundary(1)")
        self.assertEqual(status, 0)
        self.assertEqual(data["degree"], 0)
        self.assertTrue(all(row["match"] for row in data["rows"]))
        _, data = run_json("certify", "gen:building_gl(2,3)")
        self.assertEqual(
            data["manifold"],
            {"constant": True, "orientable": True, "top_homology": "Z^4"},
        )
        status, out, _ = run("poincare", "gen:sphere_boundary(3)")
        self.assertEqual(status, 0)
        self.assertIn("H_i", out)


class ExitStatusTestCase(unittest.TestCase):
    def test_input_errors(self):
        self.assertEqual(run("certify", "gen:moebius_band")[0], 1)
        self.assertEqual(run("certify", "gen:chain_poset(12)")[0], 1)
        self.assertEqual(run("certify", "does-not-exist.json")[0], 1)
        self.assertEqual(run("certify")[0], 1)
        self.assertEqual(run("gen", "square.json")[0], 1)
        self.assertEqual(run("poincare", "gen:square_poset")[0], 1)
        status, _, err = run("frobnicate", "gen:klein8")
        self.assertEqual(status, 1)
        self.assertTrue(err.startswith("error:"))

    def test_validation_errors(self):
        self.assertEqual(run("poincare", "gen:rp2_6")[0], 2)
        self.assertEqual(run("poincare", "gen:edge_and_vertex")[0], 2)
        status, _, _ = run(
            "local", "gen:square_poset", "--simplex", "0", "--method", "link"
        )
        self.assertEqual(status, 2)
        self.assertEqual(run("local", "gen:single_edge", "--simplex", "u")[0], 2)

    def test_files(self):
        with tempfile.TemporaryDirectory() as directory:
            valid = os.path.join(directory, "valid.json")
            with open(valid, "w") as stream:
                data = {"objects": ["x", "y"], "morphisms": [arrow("x", "y")]}
                json.dump(data, stream)
            self.assertEqual(run("validate", valid)[0], 0)
            duplicate = os.path.join(directory, "duplicate.json")
            with open(duplicate, "w") as stream:
                json.dump({"objects": ["x", "x"]}, stream)
            self.assertEqual(run("validate", duplicate)[0], 2)
            cyclic = os.path.join(directory, "cyclic.json")
            with open(cyclic, "w") as stream:
                json.dump({"objects": ["x"], "morphisms": [arrow("x", "x")]}, stream)
            self.assertEqual(run("validate", cyclic)[0], 2)
            unknown = os.path.join(directory, "unknown.json")
            with open(unknown, "w") as stream:
                json.dump({"edges": []}, stream)
            self.assertEqual(run("validate", unknown)[0], 1)
            broken = os.path.join(directory, "broken.json")
            with open(broken, "w") as stream:
                stream.write('{"objects": [')
            self.assertEqual(run("validate", broken)[0], 1)
            complex_ = os.path.join(directory, "complex.json")
            with open(complex_, "w") as stream:
                json.dump({"vertices": ["a", "b"], "facets": [["a", "b"]]}, stream)
            status, data = run_json("certify", complex_)
            self.assertEqual((status, data["degree"]), (0, 1))
