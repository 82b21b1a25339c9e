use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use polyproof::modeval::{project_modprod_companion, CompanionOperator};
use polyproof::modverify::{verify_mod_ff, verify_mod_over_z, Method, VerifyConfig};
use polyproof::oracle::oracle_mod_product;
use polyproof::poly::text::PolyFile;
use polyproof::poly::{mod_reduce, mul_oracle};
use polyproof::prodverify::{
    count_binomial_divisors, kronecker_base_bits, kronecker_pack, verify_product_kaminski, verify_product_kronecker,
    verify_sparse_product, KaminskiParams, SparseVerifyParams,
};
use polyproof::rings::Ring;
use polyproof::{DensePoly, ExtField, Fp64, Integers, Poly, SparsePoly, Witness};

const Q: u64 = 65_537;

fn fp(q: u64) -> Fp64 {
    Fp64::new(q).unwrap()
}

fn z_dense(c: &[i64]) -> DensePoly<Integers> {
    DensePoly::from_i64s(Integers, c)
}

fn fp_dense(q: u64, c: &[u64]) -> DensePoly<Fp64> {
    DensePoly::new(fp(q), c.iter().map(|x| x % q).collect())
}

fn z_sparse(terms: &[(u64, i64)]) -> SparsePoly<Integers> {
    SparsePoly::from_unsorted(Integers, terms.iter().map(|&(e, c)| (e, BigInt::from(c))).collect()).unwrap()
}

/// `X^k + lower`, over 𝔽_q.
fn monic_fp(q: u64, k: u64, lower: &[(u64, u64)]) -> SparsePoly<Fp64> {
    let mut terms: Vec<(u64, u64)> = lower.iter().map(|&(e, c)| (e % k, c % q)).collect();
    terms.push((k, 1));
    SparsePoly::from_unsorted(fp(q), terms).unwrap()
}

fn monic_z(k: u64, lower: &[(u64, i64)]) -> SparsePoly<Integers> {
    let mut terms: Vec<(u64, i64)> = lower.iter().map(|&(e, c)| (e % k, c)).collect();
    terms.push((k, 1));
    z_sparse(&terms)
}

/// Schoolbook product followed by long division by a monic `r`.
fn ext_mul_reference(q: u64, a: &[u64], b: &[u64], r: &[u64]) -> Vec<u64> {
    let d = r.len() - 1;
    let mut prod = vec![0u128; a.len() + b.len()];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + *x as u128 * *y as u128) % q as u128;
        }
    }
    for top in (d..prod.len()).rev() {
        let c = prod[top];
        for (k, rk) in r.iter().enumerate() {
            let idx = top - d + k;
            prod[idx] = (prod[idx] + (q as u128 - c) * *rk as u128) % q as u128;
        }
    }
    let mut out: Vec<u64> = prod[..d].iter().map(|&x| x as u64).collect();
    out.resize(d, 0);
    out
}

fn coeffs(max_len: usize, bound: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-bound..=bound, 1..=max_len)
}

fn residues(max_len: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0..Q, 1..=max_len)
}

fn terms(max_terms: usize, max_exp: u64, bound: i64) -> impl Strategy<Value = Vec<(u64, i64)>> {
    prop::collection::vec((0..max_exp, (1..=bound).prop_flat_map(|c| prop_oneof![Just(c), Just(-c)])), 1..=max_terms)
}

proptest! {
    #[test]
    fn prime_field_axioms(q in prop::sample::select(vec![2u64, 3, 97, 65_537, (1 << 61) - 1]), a: u64, b: u64, c: u64) {
        let r = fp(q);
        let (a, b, c) = (r.from_int(&a.into()), r.from_int(&b.into()), r.from_int(&c.into()));
        prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
        prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
        prop_assert_eq!(r.add(&a, &r.zero()), a);
        prop_assert_eq!(r.mul(&a, &r.one()), a);
        prop_assert!(r.is_zero(&r.add(&a, &r.neg(&a))));
        if !r.is_zero(&a) {
            prop_assert_eq!(r.mul(&a, &r.inv(&a).unwrap()), r.one());
        }
    }

    #[test]
    fn integer_axioms(a: i128, b: i128, c: i64) {
        let r = Integers;
        let (a, b, c) = (BigInt::from(a), BigInt::from(b), BigInt::from(c));
        prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
        prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
        prop_assert_eq!(r.sub(&r.add(&a, &b), &b), a);
    }

    #[test]
    fn extension_mul_matches_long_division(
        lower in prop::collection::vec(0..Q, 1..6),
        a in residues(6),
        b in residues(6),
        c in residues(6),
    ) {
        let mut r = lower;
        r.push(1);
        let ext = ExtField::new(&fp_dense(Q, &r)).unwrap();
        let (x, y, z) = (ext.elem(&a), ext.elem(&b), ext.elem(&c));
        prop_assert_eq!(ext.mul(&x, &y), ext_mul_reference(Q, &x, &y, &r));
        prop_assert_eq!(ext.mul(&ext.mul(&x, &y), &z), ext.mul(&x, &ext.mul(&y, &z)));
        prop_assert_eq!(ext.mul(&x, &ext.add(&y, &z)), ext.add(&ext.mul(&x, &y), &ext.mul(&x, &z)));
    }

    #[test]
    fn dense_sparse_round_trip(c in coeffs(40, 5)) {
        let f = z_dense(&c);
        prop_assert_eq!(f.to_sparse().to_dense(), f.clone());
        let s = f.to_sparse();
        prop_assert_eq!(s.to_dense().to_sparse(), s);
    }

    #[test]
    fn sparse_product_matches_dense(f in terms(12, 512, 50), g in terms(12, 512, 50)) {
        let (f, g) = (z_sparse(&f), z_sparse(&g));
        let sparse = mul_oracle(&f.clone().into(), &g.clone().into()).unwrap();
        let dense = mul_oracle(&f.to_dense().into(), &g.to_dense().into()).unwrap();
        prop_assert_eq!(sparse.to_dense(), dense.to_dense());
    }

    #[test]
    fn reduction_leaves_a_multiple(q in coeffs(200, 1000), k in 1u64..40, lower in terms(4, 40, 9)) {
        let p = monic_z(k, &lower);
        let q = Poly::Dense(z_dense(&q));
        let r = mod_reduce(&q, &p).unwrap();
        prop_assert!(r.deg().is_none_or(|d| d < k));
        let diff = q.to_dense().sub(&r.to_dense()).unwrap();
        let rem = long_division_remainder(&diff, &p.to_dense());
        prop_assert!(rem.is_zero());
    }

    #[test]
    fn product_norm_bound(f in terms(10, 300, 1000), g in terms(10, 300, 1000)) {
        let (f, g) = (z_sparse(&f), z_sparse(&g));
        let h = mul_oracle(&f.clone().into(), &g.clone().into()).unwrap();
        let t = f.sparsity().min(g.sparsity());
        prop_assert!(h.norm() <= BigUint::from(t) * f.norm() * g.norm());
    }

    #[test]
    fn companion_projection_is_linear(
        f in prop::collection::vec(0u64..2, 1..30),
        g in prop::collection::vec(0u64..2, 1..30),
        lower in prop::collection::vec(0u64..2, 7),
        u in prop::collection::vec(0u64..2, 7),
        v in prop::collection::vec(0u64..2, 7),
    ) {
        let ring = fp(2);
        let p = monic_fp(2, 31, &[(0, 1), (3, 1)]);
        let mut r = lower;
        r.push(1);
        let op = CompanionOperator::new(&fp_dense(2, &r)).unwrap();
        let (f, g) = (fp_dense(2, &f), fp_dense(2, &g));
        let uv: Vec<u64> = u.iter().zip(&v).map(|(a, b)| ring.add(a, b)).collect();
        let pu = project_modprod_companion(&p, &f, &g, &op, &u).unwrap();
        let pv = project_modprod_companion(&p, &f, &g, &op, &v).unwrap();
        let puv = project_modprod_companion(&p, &f, &g, &op, &uv).unwrap();
        let sum: Vec<u64> = pu.iter().zip(&pv).map(|(a, b)| ring.add(a, b)).collect();
        prop_assert_eq!(puv, sum);
    }
}

/// Remainder of `a` by a monic `b`, written out independently of `mod_reduce`.
fn long_division_remainder(a: &DensePoly<Integers>, b: &DensePoly<Integers>) -> DensePoly<Integers> {
    let mut rem: Vec<BigInt> = a.coeffs().to_vec();
    let d = b.coeffs().len() - 1;
    while rem.len() > d {
        let c = rem.pop().unwrap();
        let top = rem.len();
        for (k, bk) in b.coeffs()[..d].iter().enumerate() {
            rem[top - d + k] -= &c * bk;
        }
    }
    DensePoly::new(Integers, rem)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn true_modular_products_are_accepted(
        f in residues(40),
        g in residues(40),
        k in 2u64..48,
        lower in prop::collection::vec((0u64..48, 0..Q), 0..4),
        seed: u64,
        method in prop::sample::select(Method::ALL.to_vec()),
    ) {
        let p = monic_fp(Q, k, &lower);
        let k = k as usize;
        let (f, g): (Poly<Fp64>, Poly<Fp64>) = (fp_dense(Q, &f[..f.len().min(k)]).into(), fp_dense(Q, &g[..g.len().min(k)]).into());
        let h = oracle_mod_product(&f, &g, &p).unwrap();
        let cfg = VerifyConfig::new(0.25, seed).unwrap().with_method(method);
        match verify_mod_ff(&f, &g, &h, &p, &cfg) {
            Ok(report) => prop_assert!(report.verdict, "{:?}", report),
            Err(e) => prop_assert!(method == Method::DirectEval, "{}", e),
        }
    }

    #[test]
    fn true_modular_products_over_z_are_accepted(
        f in coeffs(40, 1 << 20),
        g in coeffs(40, 1 << 20),
        k in 1u64..48,
        lower in terms(3, 48, 5),
        seed: u64,
    ) {
        let p = monic_z(k, &lower);
        let k = k as usize;
        let (f, g): (Poly<Integers>, Poly<Integers>) = (z_dense(&f[..f.len().min(k)]).into(), z_dense(&g[..g.len().min(k)]).into());
        let h = oracle_mod_product(&f, &g, &p).unwrap();
        let report = verify_mod_over_z(&f, &g, &h, &p, &VerifyConfig::new(0.25, seed).unwrap()).unwrap();
        prop_assert!(report.verdict);
    }

    #[test]
    fn true_products_are_accepted(f in coeffs(30, 1 << 30), g in coeffs(30, 1 << 30), seed: u64, rounds in 0u64..3) {
        let (f, g): (Poly<Integers>, Poly<Integers>) = (z_dense(&f).into(), z_dense(&g).into());
        let h = mul_oracle(&f, &g).unwrap();
        let params = if rounds == 0 { KaminskiParams::default() } else { KaminskiParams::default().with_rounds(rounds) };
        let cfg = VerifyConfig::new(0.25, seed).unwrap();
        prop_assert!(verify_product_kronecker(&f, &g, &h, &params, &cfg).unwrap().verdict);
        let word = fp((1 << 61) - 1);
        let lift = |p: &Poly<Integers>| p.map(&word, |c| word.from_int(c));
        prop_assert!(verify_product_kaminski(&lift(&f), &lift(&g), &lift(&h), &params, &cfg).unwrap().verdict);
        let sp = SparseVerifyParams::new(0.25).unwrap();
        prop_assert!(verify_sparse_product(&f.to_sparse(), &g.to_sparse(), &h.to_sparse(), &sp, seed).unwrap().verdict);
    }

    #[test]
    fn size_rejections_draw_nothing(f in terms(5, 1000, 9), g in terms(5, 1000, 9), extra in terms(30, 3000, 9), seed: u64) {
        let (f, g) = (z_sparse(&f), z_sparse(&g));
        let h = mul_oracle(&f.clone().into(), &g.clone().into()).unwrap().to_sparse();
        let bad = h.add(&z_sparse(&extra)).unwrap();
        let n = f.deg().unwrap() + g.deg().unwrap();
        prop_assume!(bad.sparsity() > f.sparsity() * g.sparsity() || bad.deg() != Some(n));
        let sp = SparseVerifyParams::new(0.25).unwrap();
        let report = verify_sparse_product(&f, &g, &bad, &sp, seed).unwrap();
        prop_assert!(!report.verdict);
        prop_assert_eq!(report.rounds, 0);
        let precheck_only = matches!(report.witnesses.as_slice(), [Witness::Precheck { .. }]);
        prop_assert!(precheck_only);
        prop_assert_eq!(report, verify_sparse_product(&f, &g, &bad, &sp, seed.wrapping_add(1)).unwrap());
    }

    #[test]
    fn reports_replay_from_seed(f in residues(17), g in residues(17), flip in 0usize..17, seed: u64) {
        let p = monic_fp(Q, 17, &[(0, 1), (5, 3)]);
        let (f, g): (Poly<Fp64>, Poly<Fp64>) = (fp_dense(Q, &f).into(), fp_dense(Q, &g).into());
        let mut h = oracle_mod_product(&f, &g, &p).unwrap().to_dense().coeffs().to_vec();
        h.resize(17, 0);
        h[flip] = (h[flip] + 1) % Q;
        let h: Poly<Fp64> = fp_dense(Q, &h).into();
        for method in [Method::Extension, Method::CompanionFreivalds, Method::CompanionNoPolymul] {
            let cfg = VerifyConfig::new(0.25, seed).unwrap().with_method(method);
            let a = verify_mod_ff(&f, &g, &h, &p, &cfg).unwrap();
            let b = verify_mod_ff(&f, &g, &h, &p, &cfg).unwrap();
            prop_assert_eq!(a.to_json_line(), b.to_json_line());
        }
    }

    #[test]
    fn kronecker_packing_decides_equality(
        f in coeffs(24, 1 << 40),
        g in coeffs(24, 1 << 40),
        delta in prop::collection::vec((0usize..48, -3i64..=3), 0..3),
    ) {
        let (f, g) = (z_dense(&f), z_dense(&g));
        let product = mul_oracle(&f.clone().into(), &g.clone().into()).unwrap().to_dense();
        let mut h = product.coeffs().to_vec();
        for (i, d) in delta {
            if i < h.len() {
                h[i] += d;
            }
        }
        let h = DensePoly::new(Integers, h);
        let n = f.coeffs().len().max(g.coeffs().len()) as u64;
        let c = [f.norm(), g.norm(), h.norm()].into_iter().max().unwrap();
        let b = kronecker_base_bits(n, &c);
        let packed_equal = kronecker_pack(&f, b) * kronecker_pack(&g, b) == kronecker_pack(&h, b);
        prop_assert_eq!(packed_equal, h == product);
    }

    #[test]
    fn parser_round_trip(ring in prop::sample::select(vec!["Z", "GF 2", "GF 65537"]), c in coeffs(20, 1 << 16), sparse: bool) {
        let q = ring.strip_prefix("GF ").map(|q| q.parse::<i64>().unwrap());
        let mut c: Vec<i64> = c.iter().map(|&x| q.map_or(x, |q| x.rem_euclid(q))).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        let text = if sparse {
            let body: Vec<String> = c.iter().enumerate().filter(|(_, &x)| x != 0).map(|(e, x)| format!(" {e}:{x}")).collect();
            format!("ring {ring}\nsparse{}\n", body.concat())
        } else {
            let body: Vec<String> = c.iter().map(|x| format!(" {x}")).collect();
            format!("ring {ring}\ndense{}\n", body.concat())
        };
        prop_assert_eq!(PolyFile::parse(&text).unwrap().render(), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn few_binomials_divide_a_difference(
        n in prop::sample::select(vec![256u64, 1024]),
        delta in prop::collection::vec((0u64..2048, -5i64..=5), 1..12),
    ) {
        let delta = z_sparse(&delta.into_iter().map(|(e, c)| (e % (2 * n + 1), c)).collect::<Vec<_>>());
        prop_assume!(!delta.is_zero());
        let params = KaminskiParams::default();
        prop_assert!(count_binomial_divisors(&delta.to_dense(), n, &params).unwrap() < params.k(n));
    }
}
