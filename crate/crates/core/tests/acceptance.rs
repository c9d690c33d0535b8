//! End-to-end acceptance suite. Runs every criterion, prints one line per
//! criterion and exits nonzero if any fails or overruns its time limit.

mod common;

use std::collections::{BTreeSet, HashSet};
use std::time::{Duration, Instant};

use common::{field, random_code_exact, random_poly};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sigma_lcd::abelian::{
    all_idempotents, all_ideals, find_idempotent_generator, golay23, ideal_from_generator, is_abelian_mu1_lcd,
    mu_minus1_map, AbelianGroup,
};
use sigma_lcd::algebra::{Field, FieldRef, Poly};
use sigma_lcd::codes::{
    build_lcp, hull_dim, is_sigma_lcd, make_lcd_sigma, sigma_dual, LinearCode, SemiLinearMap,
};
use sigma_lcd::gqc::{
    all_cyclic_codes, disjoint_support_lcd, is_mua_lcd, maximal_qc_census, one_gen_lcd, one_gen_lcd_gcd,
    product_lcd_gqc, reversal_sigma_lcd, trivial_constituent_lcd, CyclotomicContext, OneGenerator,
    ProductComponent,
};
use sigma_lcd::oracle::{brute_intersection_dim, brute_min_distance, enumerate_codewords, EnumerationBudget};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn units(m: usize) -> Vec<i64> {
    (1..=m as i64).filter(|&a| gcd(a as u64, m as u64) == 1).collect()
}

/// Oracle hull: brute intersection with the σ-dual.
fn oracle_hull(c: &LinearCode, s: &SemiLinearMap) -> usize {
    brute_intersection_dim(c, &sigma_dual(c, s).unwrap()).unwrap()
}

fn random_sigma(rng: &mut impl Rng, f: &FieldRef, n: usize) -> SemiLinearMap {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let diag = (0..n).map(|_| rng.gen_range(1..f.order())).collect();
    let frob = rng.gen_range(0..f.degree());
    SemiLinearMap::new(f, perm, diag, frob).unwrap()
}

fn random_code(rng: &mut impl Rng, f: &FieldRef, max_n: usize) -> LinearCode {
    let n = rng.gen_range(1..=max_n);
    let k = rng.gen_range(0..=n);
    common::random_code(rng, f, n, k)
}

fn prop1_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let budget = EnumerationBudget::default();
    for case in 0..500 {
        let f = field(*[2, 3, 4].choose(&mut rng).unwrap());
        let c = random_code(&mut rng, &f, 8);
        let s = random_sigma(&mut rng, &f, c.n());
        let h = hull_dim(&c, &s).map_err(|e| e.to_string())?;
        let dual = sigma_dual(&c, &s).unwrap();
        let brute = brute_intersection_dim(&c, &dual).unwrap();
        // Also count the common codewords directly.
        let common = enumerate_codewords(&c, &budget).unwrap().iter().filter(|w| dual.contains(w)).count();
        ensure(h == brute && common == (f.order() as usize).pow(h as u32), || {
            format!("case {case}: hull {h}, oracle {brute}, common words {common}")
        })?;
    }
    Ok("500 pairs, hull_dim = oracle".into())
}

fn theorem1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for q in [3, 4, 5] {
        let f = field(q);
        for _ in 0..200 {
            let c = random_code(&mut rng, &f, 10);
            let w = make_lcd_sigma(&c);
            ensure(is_sigma_lcd(&w.code, &w.sigma).unwrap() && oracle_hull(&w.code, &w.sigma) == 0, || {
                format!("GF({q}): {c:?}")
            })?;
            ensure(w.code == c && w.sigma.frob() == 0, || format!("GF({q}): code or frob changed"))?;
        }
    }
    let f2 = field(2);
    for _ in 0..200 {
        let c = random_code(&mut rng, &f2, 10);
        let w = make_lcd_sigma(&c);
        ensure(w.code.n() == c.n() + 1 && w.sigma.is_permutation(), || format!("binary shape: {c:?}"))?;
        ensure(is_sigma_lcd(&w.code, &w.sigma).unwrap() && oracle_hull(&w.code, &w.sigma) == 0, || {
            format!("binary: {c:?}")
        })?;
    }
    Ok("800 codes made σ-LCD".into())
}

fn lcp_corollaries() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for q in [3, 4, 2] {
        let f = field(q);
        for _ in 0..100 {
            let n = rng.gen_range(1..=8);
            let k = rng.gen_range(0..=n);
            let c1 = random_code_exact(&mut rng, &f, n, k);
            let c2 = random_code_exact(&mut rng, &f, n, k);
            let pair = build_lcp(&c1, &c2).map_err(|e| format!("GF({q}) build: {e}"))?;
            let expected_n = if q == 2 { n + 1 } else { n };
            ensure(pair.n == expected_n && pair.c1.n() == expected_n, || format!("GF({q}): length {}", pair.n))?;
            ensure(pair.c1.k() + pair.c2.k() == pair.n, || format!("GF({q}): dimensions"))?;
            ensure(brute_intersection_dim(&pair.c1, &pair.c2).unwrap() == 0, || format!("GF({q}): overlap"))?;
        }
    }
    Ok("300 pairs, complementary; binary length n+1".into())
}

fn golay() -> Outcome {
    let f2 = field(2);
    let c = golay23(&f2).unwrap();
    let group = AbelianGroup::cyclic(23).unwrap();
    ensure((c.n(), c.k()) == (23, 12), || format!("[{}, {}]", c.n(), c.k()))?;
    let idem = find_idempotent_generator(&c, &group).unwrap();
    let mu = mu_minus1_map(&f2, &group);
    ensure(idem.is_some() && hull_dim(&c, &mu).unwrap() == 0, || "not μ₋₁-LCD".into())?;
    ensure(is_abelian_mu1_lcd(&c, &group).unwrap() && oracle_hull(&c, &mu) == 0, || "oracle".into())?;
    let d = brute_min_distance(&c, &EnumerationBudget::default()).unwrap();
    ensure(d == 7, || format!("distance {d}"))?;
    let id = SemiLinearMap::identity(&f2, 23);
    let e = hull_dim(&c, &id).unwrap();
    ensure(e == 11 && oracle_hull(&c, &id) == 11, || format!("Euclidean hull {e}"))?;
    Ok("[23,12,7], μ₋₁-LCD, Euclidean hull 11".into())
}

fn cyclic_reversal() -> Outcome {
    let mut count = 0;
    for (q, ms) in [(2u64, [7usize, 9, 15]), (3, [4, 8, 13])] {
        let f = Field::with_order(q).unwrap();
        for m in ms {
            let ctx = CyclotomicContext::new(&f, m).unwrap();
            for (zeros, c) in all_cyclic_codes(&ctx).unwrap() {
                let rev = reversal_sigma_lcd(&c).unwrap();
                let mua = is_mua_lcd(&c, &ctx, -1).unwrap();
                let flat = c.flat();
                let o_rev = oracle_hull(flat, &SemiLinearMap::reversal(&f, m));
                let o_mu = oracle_hull(flat, &c.mu_a_map(-1).unwrap());
                ensure(rev && mua && o_rev == 0 && o_mu == 0, || {
                    format!("q={q} m={m} zeros={zeros:?}: {rev} {mua} {o_rev} {o_mu}")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} cyclic codes, all reversal- and μ₋₁-LCD"))
}

fn triple_equivalence() -> Outcome {
    let mut checks = 0;
    for q in [2u64, 3] {
        let f = Field::with_order(q).unwrap();
        for m in 1..=15usize {
            if gcd(q, m as u64) != 1 {
                continue;
            }
            let ctx = CyclotomicContext::new(&f, m).unwrap();
            for (zeros, c) in all_cyclic_codes(&ctx).unwrap() {
                let zero_set: BTreeSet<usize> = zeros.iter().flat_map(|&l| ctx.coset_of(l as i64).to_vec()).collect();
                let support: BTreeSet<usize> = (0..m).filter(|i| !zero_set.contains(i)).collect();
                for a in units(m) {
                    let neg: BTreeSet<usize> = support.iter().map(|&i| (-a * i as i64).rem_euclid(m as i64) as usize).collect();
                    let s_sym = neg == support;
                    let fixed = c.mu_a(-a).unwrap().flat() == c.flat();
                    let lcd = is_mua_lcd(&c, &ctx, a).unwrap();
                    let trivial = trivial_constituent_lcd(&c, &ctx, a).unwrap();
                    ensure(s_sym == fixed && fixed == lcd && lcd == trivial, || {
                        format!("q={q} m={m} a={a} zeros={zeros:?}: {s_sym} {fixed} {lcd} {trivial}")
                    })?;
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{checks} (code, a) cases agree"))
}

fn one_generator() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut contexts = std::collections::HashMap::new();
    let mut checks = 0;
    for case in 0..300 {
        let q = *[2u64, 3].choose(&mut rng).unwrap();
        let m = loop {
            let m = rng.gen_range(1..=15usize);
            if gcd(q, m as u64) == 1 {
                break m;
            }
        };
        let l = rng.gen_range(1..=3);
        let f = Field::with_order(q).unwrap();
        let polys = (0..l).map(|_| random_poly(&mut rng, &f, m)).collect();
        let og = OneGenerator::quasi_cyclic(&f, m, polys).unwrap();
        let code = og.code();
        let ctx = contexts
            .entry((q, m))
            .or_insert_with(|| CyclotomicContext::new(&f, m).unwrap());
        for a in units(m) {
            for a in [a, -a] {
                let eval = one_gen_lcd(&og, ctx, a).unwrap();
                let by_gcd = one_gen_lcd_gcd(&og, a).unwrap();
                let oracle = oracle_hull(code.flat(), &code.mu_a_map(a).unwrap()) == 0;
                ensure(eval == by_gcd && by_gcd == oracle, || {
                    format!("case {case}: q={q} m={m} a={a}: eval {eval}, gcd {by_gcd}, oracle {oracle}")
                })?;
                checks += 1;
            }
        }
    }
    Ok(format!("300 tuples, {checks} (tuple, a) cases agree"))
}

fn maximal_count() -> Outcome {
    for (q, m) in [(2u64, 3usize), (2, 5), (4, 3)] {
        let f = Field::with_order(q).unwrap();
        let census = maximal_qc_census(&f, m).unwrap();
        let expected = (q as usize).pow(m as u32);
        ensure(census.codes == expected, || format!("q={q} m={m}: {} codes, expected {expected}", census.codes))?;
        ensure(census.canonical_forms == expected && census.canonical_consistent, || {
            format!("q={q} m={m}: canonical forms {}", census.canonical_forms)
        })?;
        ensure(census.oracle_agrees, || format!("q={q} m={m}: oracle disagrees"))?;
    }
    Ok("counts 8, 32, 64 = q^m with unique canonical forms".into())
}

fn abelian_theorem() -> Outcome {
    let mut ideals_seen = 0;
    for q in [2u32, 3] {
        let f = field(q);
        for spec in ["3", "5", "3,3", "4"] {
            let g = AbelianGroup::parse(spec).unwrap();
            let mu = mu_minus1_map(&f, &g);
            let idempotent_ideals: HashSet<_> = all_idempotents(&f, &g)
                .unwrap()
                .iter()
                .map(|e| ideal_from_generator(e).generator().row_vecs())
                .collect();
            let semisimple = g.order() as u32 % q != 0;
            for c in all_ideals(&f, &g).unwrap() {
                let lcd = oracle_hull(&c, &mu) == 0;
                let idem = idempotent_ideals.contains(&c.generator().row_vecs());
                let found = find_idempotent_generator(&c, &g).unwrap().is_some();
                ensure(lcd == idem && idem == found, || format!("q={q} G={spec}: {c:?}"))?;
                ensure(!semisimple || lcd, || format!("q={q} G={spec}: semisimple ideal not LCD"))?;
                ideals_seen += 1;
            }
        }
    }
    Ok(format!("{ideals_seen} ideals: idempotent-generated ⇔ μ₋₁-LCD"))
}

fn qr_example() -> Outcome {
    let f2 = field(2);
    let c1 = Poly::parse(&f2, "1,1,1,0,1").unwrap();
    let c2 = Poly::parse(&f2, "1,0,0,1,0,1,1").unwrap();
    let og = OneGenerator::quasi_cyclic(&f2, 7, vec![c1, c2]).unwrap();
    let code = og.code();
    let ctx = code.context().unwrap();
    let criterion = disjoint_support_lcd(&og, &ctx).unwrap();
    let constituents = is_mua_lcd(&code, &ctx, -1).unwrap();
    let oracle = oracle_hull(code.flat(), &code.mu_a_map(-1).unwrap()) == 0;
    ensure(criterion && constituents && oracle, || format!("{criterion} {constituents} {oracle}"))?;
    Ok("disjoint supports, constituents and oracle all μ₋₁-LCD".into())
}

/// Random Euclidean LCD code of length `r` and dimension `k` over `f`.
fn random_lcd(rng: &mut impl Rng, f: &FieldRef, r: usize, k: usize) -> LinearCode {
    loop {
        let c = random_code_exact(rng, f, r, k);
        if is_sigma_lcd(&c, &SemiLinearMap::identity(f, r)).unwrap() {
            return c;
        }
    }
}

fn product_construction() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let f2 = field(2);
    let budget = EnumerationBudget::default();
    let mut instances = 0;
    for (m1, m2) in [(3usize, 5usize), (7, 9)] {
        let degree = |m: usize| {
            let ctx = CyclotomicContext::new(&f2, m).unwrap();
            ctx.coset_of(1).len() as u32
        };
        let (d1, d2) = (degree(m1), degree(m2));
        let (k1f, k2f) = (Field::new(2, d1, None).unwrap(), Field::new(2, d2, None).unwrap());
        for _ in 0..8 {
            let comps: Vec<ProductComponent> = [(m1, &k1f), (m2, &k2f)]
                .into_iter()
                .map(|(m, kf)| {
                    let r = rng.gen_range(1..=2);
                    let k = rng.gen_range(0..=r);
                    ProductComponent {
                        m,
                        code: random_lcd(&mut rng, kf, r, k),
                    }
                })
                .collect();
            let out = product_lcd_gqc(&f2, &comps).map_err(|e| e.to_string())?;
            let expected: usize = comps.iter().map(|c| c.code.k() * c.code.field().degree() as usize).sum();
            let flat = out.code.flat();
            ensure(out.dimension == expected && flat.k() == expected, || {
                format!("({m1},{m2}): dimension {} vs {expected}", flat.k())
            })?;
            let ctx = out.code.context().unwrap();
            ensure(is_mua_lcd(&out.code, &ctx, -1).unwrap(), || "constituents".into())?;
            ensure(oracle_hull(flat, &out.code.mu_a_map(-1).unwrap()) == 0, || "oracle hull".into())?;
            if flat.k() > 0 {
                let d = brute_min_distance(flat, &budget).unwrap();
                let bound = out.distance_bound.ok_or("bound unavailable")?;
                ensure(d >= bound, || format!("({m1},{m2}): distance {d} below bound {bound}"))?;
            }
            instances += 1;
        }
    }
    Ok(format!("{instances} products verified, distance ≥ bound"))
}

fn main() {
    let criteria: [(&str, u64, fn() -> Outcome); 11] = [
        ("1 hull formula vs oracle", 30, prop1_oracle),
        ("2 σ-LCD construction", 30, theorem1),
        ("3 LCP construction", 60, lcp_corollaries),
        ("4 Golay [23,12,7]", 5, golay),
        ("5 cyclic reversal", 60, cyclic_reversal),
        ("6 μ_a triple equivalence", 120, triple_equivalence),
        ("7 1-generator criteria", 120, one_generator),
        ("8 maximal QC count", 120, maximal_count),
        ("9 Abelian idempotents", 60, abelian_theorem),
        ("10 QR idempotent pair", 5, qr_example),
        ("11 product construction", 120, product_construction),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(limit);
        let (status, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over the {limit} s limit")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {name:<28} {status}  {:>7.2} s  {detail}", elapsed.as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 11 criteria passed");
}
