use metacode::gf4::{Gf4, Gf4Vector};

mod common;

const BORDERED_HEXACODE: [&str; 7] = [
    "w 1 1 1 1 1 1",
    "1 w 1 1 1 0 0",
    "1 1 w 1 0 1 0",
    "1 1 1 w 0 0 1",
    "1 1 0 0 w 1 1",
    "1 0 1 0 1 w 1",
    "1 0 0 1 1 1 w",
];

fn rows() -> Vec<Gf4Vector> {
    BORDERED_HEXACODE.iter().map(|r| Gf4Vector::parse(r).unwrap()).collect()
}

#[test]
fn row_sums() {
    let r = rows();
    let s = r[0].add(&r[1]).unwrap();
    assert_eq!(s.to_string(), "W W 0 0 0 1 1");
    assert_eq!(s.weight(), 4);
    assert_eq!(r[0].distance(&r[1]).unwrap(), 4);
    assert_eq!(r[4].add(&r[4]).unwrap(), Gf4Vector::zeros(7));
}

#[test]
fn rows_are_pairwise_orthogonal() {
    let r = rows();
    for a in &r {
        for b in &r {
            assert!(!a.trace_ip(b).unwrap());
        }
    }
}

#[test]
fn trace_form_matches_scalar_table() {
    let scalar: Vec<Vec<u8>> = BORDERED_HEXACODE
        .iter()
        .map(|r| r.split(' ').map(|s| common::from_symbol(s.chars().next().unwrap())).collect())
        .collect();
    let shifted = Gf4Vector::parse("w W 1 0 w W 1").unwrap();
    let shifted_scalar: Vec<u8> = "wW10wW1".chars().map(common::from_symbol).collect();
    for (v, s) in rows().iter().zip(&scalar) {
        assert_eq!(v.trace_ip(&shifted).unwrap() as u8, common::trace_ip(s, &shifted_scalar));
    }
}

#[test]
fn symbols() {
    assert_eq!(Gf4::ALL.map(|x| x.symbol()), ['0', '1', 'w', 'W']);
    assert_eq!(Gf4::OMEGA + Gf4::ONE, Gf4::OMEGA_BAR);
    assert!(Gf4Vector::parse("w 2").is_err());
    assert!(rows()[0].add(&Gf4Vector::zeros(6)).is_err());
}
