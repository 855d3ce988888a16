use qrefl_core::*;

fn main() {
    let s = Scalar::s();
    // n=2 screening: all matrix units and diagonals over {0,1,q,s}
    let n = 2;
    let r = r_matrix(n).unwrap();
    let vals: Vec<(&str, Scalar)> = vec![
        ("0", Scalar::zero()), ("1", Scalar::one()), ("q", Scalar::q_int(1)), ("s", s.clone()),
    ];
    let mut battery: Vec<(String, CharacterMatrix)> = Vec::new();
    for i in 1..=n { for j in 1..=n {
        let mut m = CharacterMatrix::new(n, vec![Scalar::zero(); 4]).unwrap();
        m.set(i, j, Scalar::one());
        if check_reflection(&r, &m).passed { battery.push((format!("E{i}{j}"), m)); }
    }}
    for (na, a) in &vals { for (nb, b) in &vals {
        let mut m = CharacterMatrix::new(n, vec![Scalar::zero(); 4]).unwrap();
        m.set(1, 1, a.clone());
        m.set(2, 2, b.clone());
        if check_reflection(&r, &m).passed { battery.push((format!("diag({na},{nb})"), m)); }
    }}
    battery.push(("grassmann2".into(), grassmann_matrix(2, &s, &Scalar::one()).unwrap()));
    for (name, m) in &battery {
        let a = qdet_antisym(m);
        let b = qdet_monomial_oracle(m);
        match (a, b) {
            (Ok(a), Ok(b)) => {
                let det = det_fraction_free(&m.as_operator());
                println!("{name}: qdet={a} oracle={b} equal={} det={} crit={}",
                    a == b, det, (det.is_zero() == a.is_zero()));
            }
            (a, b) => println!("{name}: ERROR {a:?} {b:?}"),
        }
    }
}
