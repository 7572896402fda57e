use pyo3::prelude::*;
use pyo3::types::PyDict;

fn run(code: &std::ffi::CStr) {
    Python::attach(|py| {
        let module = pyo3::wrap_pymodule!(pretzel_knots::pretzel_knots)(py);
        let globals = PyDict::new(py);
        globals.set_item("pk", module).unwrap();
        if let Err(e) = py.run(code, Some(&globals), None) {
            e.print(py);
            panic!("python snippet failed");
        }
    });
}

#[test]
fn polynomials() {
    run(c"
p = pk.LaurentPoly({7: 1, 3: -1, -5: -1})
assert p.text() == 'A^7 - A^3 - A^-5'
assert str(p) == p.text()
assert p.latex() == 'A^{7} - A^{3} - A^{-5}'
assert p.terms == [(-5, -1), (3, -1), (7, 1)]
assert pk.LaurentPoly.from_json(p.json()) == p
assert pk.LaurentPoly([(1, 2), (1, -2)]).is_zero()
d = pk.loop_value()
assert d * d == pk.LaurentPoly({4: 1, 0: 2, -4: 1})
assert d ** 2 == d * d and -(-d) == d and d - d == pk.LaurentPoly()
assert p.substitute_inverse().substitute_inverse() == p
assert len({p, pk.LaurentPoly({7: 1, 3: -1, -5: -1})}) == 1
z = pk.LaurentPoly({0: 1, 2: 2}, variable='z')
assert z.latex() == '1 + 2z^{2}' and z.variable == 'z'
assert repr(z) == \"LaurentPoly('1 + 2z^2')\"
try:
    p + z
    raise AssertionError('mixed variables accepted')
except ValueError:
    pass
assert p.coeff(7) == 1 and p.coeff(8) == 0
big = pk.LaurentPoly({0: 2}) ** 100
assert big.coeff(0) == 2 ** 100
");
}

#[test]
fn specs_and_brackets() {
    run(c"
s = pk.PretzelSpec([1, 1, 1])
assert str(s) == '1,1,1' and s.crossing_count == 3
assert pk.PretzelSpec.parse(' 1, 1, -4') == pk.PretzelSpec([1, 1, -4])
assert repr(s.mirror()) == 'PretzelSpec([-1, -1, -1])'
golden = pk.LaurentPoly({7: 1, 3: -1, -5: -1})
r = pk.bracket_statesum(s)
assert r.polynomial == golden and r.method == 'statesum' and r.state_count == 8
assert pk.bracket_statesum('1,1,1').polynomial == golden
assert pk.bracket_tangle_eval([1, 1, 1]).polynomial == golden
assert pk.bracket_closed_general(2, 1).polynomial == golden
for n in range(2, 8):
    assert pk.bracket_closed_p11n(n).polynomial == pk.bracket_statesum([1, 1, n]).polynomial
for bad in (lambda: pk.bracket_closed_p11n(1), lambda: pk.PretzelSpec([1, 0]),
            lambda: pk.bracket_statesum([9, 9, 9]), lambda: pk.bracket_statesum('1,x')):
    try:
        bad()
        raise AssertionError('accepted')
    except ValueError:
        pass
");
}

#[test]
fn conway_and_states() {
    run(c"
assert pk.conway_closed_p11n(1).text() == '1 + z^2'
assert pk.conway_skein_p11n(2).text() == '1 - z^2'
assert all(pk.conway_closed_p11n(n) == pk.conway_skein_p11n(n) for n in range(-9, 10) if n)
assert pk.count_circles('1,1,1', 'AAA') == 3
assert pk.count_circles([1, 1, 4], 'AABBBB') == 5
assert pk.classify_state_p11n('1,1,4', 'AABBBB') == 5
assert pk.classify_state_general(2, 4, 1, 2) >= 1
for bad in (lambda: pk.count_circles('1,1,1', 'AA'), lambda: pk.count_circles('1,1,1', 'AXA'),
            lambda: pk.classify_state_general(0, 3, 0, 0), lambda: pk.conway_closed_p11n(0)):
    try:
        bad()
        raise AssertionError('accepted')
    except ValueError:
        pass
");
}
