use num_complex::Complex64;
use num_rational::Rational64;
use proptest::prelude::*;
use sccckit::born::scalar_sum;
use sccckit::ortho::{self, OplusDecomposition};
use sccckit::wproj::{canonical_rep, lift, wequal};
use sccckit::{sccc, MatrixLiteral, Morphism, Object, Tolerance};

type M = Morphism<Complex64>;

fn object(d: usize, label: &str) -> Object {
    if d == 1 {
        Object::Unit
    } else {
        Object::gen(label, d)
    }
}

fn entries(n: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-3.0..3.0f64, -3.0..3.0f64).prop_map(|(re, im)| Complex64::new(re, im)), n)
}

/// A morphism `A → B` with both dimensions in `1..=4`.
fn morphism() -> impl Strategy<Value = M> {
    (1..=4usize, 1..=4usize).prop_flat_map(|(c, r)| {
        entries(r * c).prop_map(move |e| Morphism::from_fn(&object(c, "A"), &object(r, "B"), |i, j| e[i * c + j]))
    })
}

/// Two morphisms of the same type.
fn parallel_pair() -> impl Strategy<Value = (M, M)> {
    (1..=4usize, 1..=4usize).prop_flat_map(|(c, r)| {
        (entries(r * c), entries(r * c)).prop_map(move |(e, f)| {
            let (a, b) = (object(c, "A"), object(r, "B"));
            (Morphism::from_fn(&a, &b, |i, j| e[i * c + j]), Morphism::from_fn(&a, &b, |i, j| f[i * c + j]))
        })
    })
}

fn composable() -> impl Strategy<Value = (M, M)> {
    (1..=4usize, 1..=4usize, 1..=4usize).prop_flat_map(|(a, b, c)| {
        (entries(a * b), entries(b * c)).prop_map(move |(e, f)| {
            let (oa, ob, oc) = (object(a, "A"), object(b, "B"), object(c, "C"));
            let f1 = Morphism::from_fn(&oa, &ob, |i, j| e[i * a + j]);
            let g = Morphism::from_fn(&ob, &oc, |i, j| f[i * b + j]);
            (f1, g)
        })
    })
}

/// `f : A → B` and `g : B → A`.
fn round_trip() -> impl Strategy<Value = (M, M)> {
    (1..=4usize, 1..=4usize).prop_flat_map(|(a, b)| {
        (entries(a * b), entries(a * b)).prop_map(move |(e, f)| {
            let (oa, ob) = (object(a, "A"), object(b, "B"));
            (Morphism::from_fn(&oa, &ob, |i, j| e[i * a + j]), Morphism::from_fn(&ob, &oa, |i, j| f[i * b + j]))
        })
    })
}

fn small_object() -> impl Strategy<Value = Object> {
    let leaf = prop_oneof![
        Just(Object::Unit),
        Just(Object::Zero),
        (2..=3usize).prop_map(|d| Object::gen("A", d)),
        (2..=3usize).prop_map(|d| Object::gen("B", d)),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| a.dual()),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.tensor(&b)),
            (inner.clone(), inner).prop_map(|(a, b)| a.oplus(&b)),
        ]
    })
}

fn close(a: &M, b: &M) -> bool {
    a.approx_eq(b, &Tolerance::default())
}

proptest! {
    #[test]
    fn normalizing_keeps_dimension(a in small_object()) {
        prop_assert_eq!(a.normalize().dim(), a.dim());
        prop_assert_eq!(a.normalize().normalize(), a.normalize());
    }

    #[test]
    fn objects_print_and_parse_back(a in small_object()) {
        let text = a.to_string();
        let back: Object = text.parse().unwrap();
        prop_assert_eq!(back.normalize(), a.normalize());
    }

    #[test]
    fn dagger_is_an_involutive_contravariant_functor((f, g) in composable()) {
        prop_assert_eq!(f.dagger().dagger(), f.clone());
        let gf = g.compose(&f).unwrap();
        prop_assert!(close(&gf.dagger(), &f.dagger().compose(&g.dagger()).unwrap()));
    }

    #[test]
    fn trace_is_cyclic((f, g) in round_trip()) {
        let (gf, fg) = (g.compose(&f).unwrap(), f.compose(&g).unwrap());
        let (x, y) = (sccc::trace(&gf).unwrap(), sccc::trace(&fg).unwrap());
        prop_assert!(close(&x, &y));
    }

    #[test]
    fn squared_norm_is_sum_of_squared_moduli(f in morphism()) {
        let n = *sccc::hs_norm_sq(&f).value().unwrap();
        let oracle: f64 = f.entries().iter().map(|x| x.norm_sqr()).sum();
        prop_assert!((n.re - oracle).abs() <= 1e-9 * oracle.max(1.0));
        prop_assert!(n.im.abs() <= 1e-12);
    }

    #[test]
    fn derived_sum_is_entrywise_and_commutative((f, g) in parallel_pair()) {
        let s = ortho::derived_sum(&f, &g).unwrap();
        prop_assert!(close(&s, &f.entrywise_sum(&g).unwrap()));
        prop_assert!(close(&s, &ortho::derived_sum(&g, &f).unwrap()));
        let zero: M = ortho::zero_morphism(f.dom(), f.cod());
        prop_assert!(close(&ortho::derived_sum(&f, &zero).unwrap(), &f));
    }

    #[test]
    fn pseudo_components_reassemble(f in morphism(), split in 0usize..3) {
        // Split the codomain as I ⊕ rest when it has room.
        prop_assume!(f.rows() >= 2);
        let rows = f.rows();
        let head = 1 + split.min(rows - 2);
        let cod = OplusDecomposition::new(vec![object(head, "H"), object(rows - head, "T")]).unwrap();
        let g = f.clone().retype(f.dom(), cod.whole()).unwrap();
        let dom = OplusDecomposition::new(vec![g.dom().clone()]).unwrap();
        let back = ortho::reassemble(&g, &dom, &cod).unwrap();
        prop_assert!(close(&back, &g));
    }

    #[test]
    fn phase_classes_ignore_global_phase(f in morphism(), theta in 0.0..std::f64::consts::TAU) {
        let g = f.scale(&Complex64::from_polar(1.0, theta));
        let tol = Tolerance::default();
        prop_assert!(wequal(&lift(&f), &lift(&g), &tol).unwrap());
        prop_assert!(wequal(&lift(&g), &lift(&f), &tol).unwrap());
        prop_assert!(close(&canonical_rep(&f), &canonical_rep(&g)));
    }

    #[test]
    fn canonical_representative_is_idempotent(f in morphism()) {
        let c = canonical_rep(&f);
        prop_assert!(close(&canonical_rep(&c), &c));
        prop_assert!(close(&sccc::double(&c), &sccc::double(&f)));
    }

    #[test]
    fn norm_sum_is_associative(x in 0.0..5.0f64, y in 0.0..5.0f64, z in 0.0..5.0f64) {
        let s = |v: f64| Morphism::scalar(Complex64::new(v, 0.0));
        let half = Rational64::new(1, 2);
        let l = scalar_sum(&scalar_sum(&s(x), &s(y), half).unwrap(), &s(z), half).unwrap();
        let r = scalar_sum(&s(x), &scalar_sum(&s(y), &s(z), half).unwrap(), half).unwrap();
        prop_assert!(close(&l, &r));
        let oracle = (x * x + y * y + z * z).sqrt();
        prop_assert!((l.value().unwrap().re - oracle).abs() <= 1e-9 * oracle.max(1.0));
    }

    #[test]
    fn literals_round_trip(f in morphism()) {
        let lit = MatrixLiteral::from_morphism(&f);
        let json = serde_json::to_string(&lit).unwrap();
        let back: M = MatrixLiteral::parse(&json, "X").unwrap().to_morphism().unwrap();
        prop_assert_eq!(back, f);
    }
}
