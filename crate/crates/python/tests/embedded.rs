//! Drives the module through an embedded interpreter.

use pyo3::prelude::*;
use pyo3::types::PyDict;

fn with_module(code: &str) {
    Python::initialize();
    Python::attach(|py| {
        let module = pyo3::wrap_pymodule!(fuzzy_wiener_py::fuzzy_wiener_py)(py);
        let globals = PyDict::new(py);
        globals.set_item("fw", module).unwrap();
        let code = std::ffi::CString::new(code).unwrap();
        py.run(&code, Some(&globals), None).unwrap_or_else(|e| {
            e.display(py);
            panic!("python code failed");
        });
    });
}

#[test]
fn exact_indices_come_back_as_fractions() {
    with_module(
        r#"
from fractions import Fraction
g = fw.FuzzyGraph([(v, "1") for v in "abcde"],
                  [("a", "b", "0.1"), ("b", "c", "0.3"), ("c", "e", "0.3"), ("c", "d", "0.5"), ("a", "e", "0.6")])
assert g.wiener_index() == Fraction("7.4")
assert g.mst().connectivity_index() == Fraction(7, 2)
assert fw.check_corollary_star(g)["holds"] is False
"#,
    );
}

#[test]
fn cycle_helpers_and_errors() {
    with_module(
        r#"
from fractions import Fraction
assert fw.make_saturated_cycle(4, 0.5, 0.3).wiener_index() == 4 * Fraction("0.8")
assert fw.check_theorem_star(6, "0.9", "0.8")["detail"]["formula"] == Fraction(450, 16) * Fraction("1.7")
for args in [(5, "0.5", "0.3"), (4, "0.3", "0.5"), (4, True, "0.1")]:
    try:
        fw.make_saturated_cycle(*args)
    except ValueError:
        pass
    else:
        raise AssertionError(args)
"#,
    );
}
