use distalg::{dist_from_json, dist_to_json, mset_from_json, mset_to_json};
use distalg_core::scalar::{int, rat};
use distalg_core::{Bound, Dist, Interval, MSet, Poly, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    let a = rat(rng.gen_range(-9..=9), rng.gen_range(1..=7));
    let b = if rng.gen_bool(0.3) { rat(rng.gen_range(-9..=9), rng.gen_range(1..=7)) } else { int(0) };
    Scalar::new(a, b)
}

fn random_dist(rng: &mut ChaCha8Rng) -> Dist {
    let mut f = Dist::zero();
    for _ in 0..rng.gen_range(0..5) {
        let a = rat(rng.gen_range(-6..=6), rng.gen_range(1..=4));
        let term = match rng.gen_range(0..4) {
            0 => Dist::delta(a, rng.gen_range(0..4)),
            1 => Dist::heaviside(a),
            2 => Dist::abs_shift(a),
            _ => {
                Dist::windowed(Poly::new((0..4).map(|_| random_scalar(rng)).collect()), Bound::Finite(a), Bound::PosInf)
            }
        };
        f = &f + &term.scale(&random_scalar(rng));
    }
    f
}

#[test]
fn distributions_round_trip_bit_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..300 {
        let f = random_dist(&mut rng);
        let text = dist_to_json(&f);
        let back = dist_from_json(&text).unwrap();
        assert_eq!(back, f);
        assert_eq!(dist_to_json(&back), text);
    }
}

#[test]
fn sets_round_trip_bit_exact() {
    let m = MSet::from_intervals([
        Interval::new(Bound::NegInf, Bound::Finite(rat(-1, 2)), false, true),
        Interval::new(Bound::Finite(int(1)), Bound::PosInf, true, false),
    ])
    .add_point(int(0))
    .remove_point(int(2));
    let text = mset_to_json(&m);
    let back = mset_from_json(&text).unwrap();
    assert_eq!(back, m);
    assert_eq!(mset_to_json(&back), text);
}

#[test]
fn unsorted_input_is_normalized() {
    // seams given out of order are sorted; the output is canonical
    let text = r#"{"breakpoints":["1","0"],"pieces":[[],["1"],["1"]],"deltas":{"1":"[0,2]"}}"#;
    let f = dist_from_json(text).unwrap();
    assert_eq!(f, &Dist::heaviside(int(0)) + &Dist::delta(int(1), 1).scale(&Scalar::from_int(2)));
}
