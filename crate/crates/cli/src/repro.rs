use sigma_lcd::abelian::{find_idempotent_generator, golay23, golay23_generator, mu_minus1_map, AbelianGroup};
use sigma_lcd::algebra::{Field, Poly};
use sigma_lcd::codes::{hull_dim, is_sigma_lcd, make_lcd_sigma, sigma_dual, LinearCode, SemiLinearMap};
use sigma_lcd::gqc::{disjoint_support_lcd, is_mua_lcd, maximal_qc_census, OneGenerator};
use sigma_lcd::oracle::{
    brute_intersection_dim, brute_min_distance_parallel, exhaustive_sigma_search, EnumerationBudget, SigmaFamily,
};

use crate::report::RunReport;
use crate::{CliResult, Global};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Golay23,
    #[value(name = "qr-idempotent-7")]
    QrIdempotent7,
    Theorem1Binary,
    MaximalQcCount,
}

pub fn run(suite: Suite, g: &Global) -> CliResult<RunReport> {
    match suite {
        Suite::Golay23 => golay(g),
        Suite::QrIdempotent7 => qr_idempotent(),
        Suite::Theorem1Binary => theorem1_binary(),
        Suite::MaximalQcCount => maximal_count(),
    }
}

/// The binary Golay code as an ideal of `F_2[Z_23]`.
fn golay(g: &Global) -> CliResult<RunReport> {
    let f2 = Field::prime(2)?;
    let c = golay23(&f2)?;
    let group = AbelianGroup::cyclic(23)?;
    let mut r = RunReport::new("repro golay23");
    r.input("generator", golay23_generator(&f2)?.to_text());
    let idem = find_idempotent_generator(&c, &group)?;
    let mu = mu_minus1_map(&f2, &group);
    let mu_hull = hull_dim(&c, &mu)?;
    let mu_brute = brute_intersection_dim(&c, &sigma_dual(&c, &mu)?)?;
    let id = SemiLinearMap::identity(&f2, 23);
    let e_hull = hull_dim(&c, &id)?;
    let e_brute = brute_intersection_dim(&c, &c.dual())?;
    let d = brute_min_distance_parallel(&c, &EnumerationBudget::with_words(g.budget), g.jobs)?;
    r.set("n", c.n()).set("k", c.k()).set("d", d);
    r.set(
        "idempotent",
        idem.as_ref().map_or_else(|| "none".to_string(), |e| e.to_text()),
    );
    r.set("mu1_hull_dim", mu_hull).set("euclidean_hull_dim", e_hull);
    let lcd = idem.is_some() && mu_hull == 0;
    r.verdict(lcd && (c.n(), c.k(), d) == (23, 12, 7) && e_hull == 11);
    r.check(mu_brute == mu_hull && e_brute == e_hull);
    Ok(r)
}

/// Idempotents of the even-like binary QR codes of length 7 as a
/// 2-generator QC code.
fn qr_idempotent() -> CliResult<RunReport> {
    let f2 = Field::prime(2)?;
    let c1 = Poly::parse(&f2, "1,1,1,0,1")?;
    let c2 = Poly::parse(&f2, "1,0,0,1,0,1,1")?;
    let mut r = RunReport::new("repro qr-idempotent-7");
    r.input("c1", c1.to_text()).input("c2", c2.to_text());
    let og = OneGenerator::quasi_cyclic(&f2, 7, vec![c1, c2])?;
    let code = og.code();
    let ctx = code.context()?;
    let criterion = disjoint_support_lcd(&og, &ctx)?;
    let constituents = is_mua_lcd(&code, &ctx, -1)?;
    let flat = code.flat();
    let brute = brute_intersection_dim(flat, &sigma_dual(flat, &code.mu_a_map(-1)?)?)?;
    r.set("n", flat.n()).set("k", flat.k());
    r.set("disjoint_support", criterion)
        .set("constituent_lcd", constituents)
        .set("oracle_hull_dim", brute);
    r.verdict(criterion && constituents).check(constituents == (brute == 0));
    Ok(r)
}

/// An even-like binary code containing the all-ones word: no permutation
/// of its own length works, one extra coordinate does.
fn theorem1_binary() -> CliResult<RunReport> {
    let f2 = Field::prime(2)?;
    let c = LinearCode::from_rows(&f2, 4, &[vec![1, 1, 1, 1], vec![1, 1, 0, 0]])?;
    let mut r = RunReport::new("repro theorem1-binary");
    r.input("code", c.to_text().trim_end());
    let same_length = exhaustive_sigma_search(
        &c,
        SigmaFamily::PermutationSample { samples: 0, seed: 0 },
        &EnumerationBudget::default(),
    );
    let w = make_lcd_sigma(&c);
    let lcd = is_sigma_lcd(&w.code, &w.sigma)?;
    let brute = brute_intersection_dim(&w.code, &sigma_dual(&w.code, &w.sigma)?)?;
    r.set("permutation_at_length_4", same_length.is_some())
        .set("extended_length", w.code.n())
        .set("permutation_only", w.sigma.is_permutation())
        .set("sigma", w.sigma.to_text().trim_end());
    r.verdict(same_length.is_none() && lcd && w.sigma.is_permutation() && w.code.n() == 5);
    r.check((brute == 0) == lcd);
    Ok(r)
}

fn maximal_count() -> CliResult<RunReport> {
    let f2 = Field::prime(2)?;
    let census = maximal_qc_census(&f2, 3)?;
    let mut r = RunReport::new("repro maximal-qc-count");
    r.input("q", 2).input("m", 3);
    r.set("count", census.codes)
        .set("expected", 8)
        .set("canonical_forms", census.canonical_forms);
    r.verdict(census.codes == 8 && census.canonical_forms == 8 && census.canonical_consistent);
    r.check(census.oracle_agrees);
    Ok(r)
}
