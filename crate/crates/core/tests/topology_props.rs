use kminv::invariants::bilinear_form;
use kminv::polyring::ratio;
use kminv::topology::{
    extract_generator_sequence, flag_series_t, homotopy_report, reconstruct_flag_series, signature_of, Signature,
};
use kminv::weyl::enumerate_by_length;
use kminv::{CartanMatrix, Kind};
use proptest::prelude::*;

fn all_infinite(n: usize, entries: &[i64]) -> CartanMatrix {
    let mut rows = vec![vec![2i64; n]; n];
    let mut it = entries.iter().cycle();
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            if i != j {
                *x = -*it.next().unwrap();
            }
        }
    }
    CartanMatrix::validate(&rows).unwrap()
}

#[test]
fn growth_of_all_infinite_matrices() {
    for n in 2..=4usize {
        let a = all_infinite(n, &[2]);
        let counts = enumerate_by_length(&a, 8).unwrap().counts;
        // (1+t)/(1-(n-1)t) = 1 + Σ_{k≥1} n(n-1)^{k-1} t^k
        let expected: Vec<u64> = (0..=8u32)
            .map(|k| if k == 0 { 1 } else { (n as u64) * (n as u64 - 1).pow(k - 1) })
            .collect();
        assert_eq!(counts, expected, "n = {n}");
    }
}

#[test]
fn reports_depend_only_on_rank_and_epsilon() {
    let non_sym = [
        all_infinite(3, &[2, 2, 2, 2, 3, 2]),
        all_infinite(3, &[3, 2, 4, 2, 2, 5]),
        all_infinite(3, &[2, 5, 3, 4, 2, 2]),
    ];
    let sym = [all_infinite(3, &[2]), all_infinite(3, &[3]), all_infinite(3, &[2, 4, 2, 2, 4, 2])];
    for group in [&non_sym, &sym] {
        let reports: Vec<_> = group.iter().map(|a| homotopy_report(a, 12, 24).unwrap()).collect();
        let eps = reports[0].epsilon;
        assert!(group.iter().all(|a| a.symmetrize().exists() == (eps == 1)));
        for r in &reports[1..] {
            assert_eq!(r, &reports[0]);
        }
    }
}

fn indefinite_matrix() -> impl Strategy<Value = CartanMatrix> {
    (2usize..=4)
        .prop_flat_map(|n| proptest::collection::vec(0i64..=3, n * (n - 1) / 2 * 2).prop_map(move |v| (n, v)))
        .prop_filter_map("indecomposable indefinite", |(n, v)| {
            let mut rows = vec![vec![0i64; n]; n];
            let mut k = 0;
            for i in 0..n {
                rows[i][i] = 2;
                for j in i + 1..n {
                    let (x, y) = (v[k], v[k + 1]);
                    k += 2;
                    if x == 0 || y == 0 {
                        continue;
                    }
                    rows[i][j] = -x;
                    rows[j][i] = -y;
                }
            }
            let a = CartanMatrix::validate(&rows).ok()?;
            (a.kind().ok()? == Kind::Indefinite).then_some(a)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn tau_under_rescaling(a in indefinite_matrix(), num in 1i64..7, den in 1i64..7) {
        if let Ok(form) = bilinear_form(&a) {
            let base = signature_of(&form.matrix());
            prop_assert_eq!(base.p + base.q + base.r, a.rank());
            prop_assert_eq!(signature_of(&form.scaled(&ratio(num, den)).matrix()), base);
            let flipped = signature_of(&form.scaled(&ratio(-num, den)).matrix());
            prop_assert_eq!(flipped, Signature { p: base.q, q: base.p, r: base.r });
        }
    }

    #[test]
    fn extraction_round_trips(a in indefinite_matrix()) {
        let series = flag_series_t(&a, 8).unwrap();
        let i_even = extract_generator_sequence(&a, &series, 16).unwrap();
        prop_assert!(i_even.values().all(|&i| i >= 0));
        let eps = u8::from(a.symmetrize().exists());
        prop_assert_eq!(reconstruct_flag_series(a.rank(), eps, &i_even, 9), series);
    }
}
