use std::path::PathBuf;

use sigma_lcd::abelian::{find_idempotent_generator, is_abelian_mu1_lcd, mu_minus1_map, AbelianGroup};
use sigma_lcd::algebra::{parse_field, FieldRef};
use sigma_lcd::codes::{
    build_lcp_with_budget, hull_dim, is_sigma_lcd, is_sigma_self_dual, is_sigma_self_orthogonal, make_lcd_sigma,
    normalize_hull, sigma_dual, LinearCode, SemiLinearMap,
};
use sigma_lcd::gqc::{
    constituents, cyclotomic_cosets, is_mua_lcd, is_mua_self_dual, is_mua_self_orthogonal, maximal_one_gen_check,
    one_gen_lcd, one_gen_lcd_gcd, one_gen_self_orthogonal, product_lcd_gqc_with_budget, CyclotomicContext, GqcCode,
    OneGenerator, ProductComponent,
};
use sigma_lcd::oracle::{
    brute_intersection_dim, brute_min_distance_parallel, exhaustive_sigma_search, EnumerationBudget, SigmaFamily,
};

use crate::report::RunReport;
use crate::{read, AbelianCmd, CliError, CliResult, GqcCmd, Global, LcdCmd, LcpCmd, OracleCmd};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Test {
    Lcd,
    So,
    Sd,
}

impl Test {
    fn name(self) -> &'static str {
        match self {
            Test::Lcd => "lcd",
            Test::So => "self-orthogonal",
            Test::Sd => "self-dual",
        }
    }

    /// The verdict implied by a hull dimension.
    fn from_hull(self, h: usize, k: usize, n: usize) -> bool {
        match self {
            Test::Lcd => h == 0,
            Test::So => h == k,
            Test::Sd => h == k && 2 * k == n,
        }
    }
}

fn budget(g: &Global) -> EnumerationBudget {
    EnumerationBudget::with_words(g.budget)
}

pub fn load_code(path: &PathBuf) -> CliResult<LinearCode> {
    Ok(LinearCode::parse(&read(path)?)?)
}

fn describe(c: &LinearCode) -> String {
    format!("[{}, {}] over GF({})", c.n(), c.k(), c.field().order())
}

/// `id`, `reversal`, `frobenius:<s>` or a σ file.
pub fn resolve_sigma(spec: &str, field: &FieldRef, n: usize) -> CliResult<SemiLinearMap> {
    match spec {
        "id" | "identity" => Ok(SemiLinearMap::identity(field, n)),
        "reversal" => Ok(SemiLinearMap::reversal(field, n)),
        _ => {
            if let Some(s) = spec.strip_prefix("frobenius:") {
                let s = s
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad Frobenius power '{s}'")))?;
                return Ok(SemiLinearMap::frobenius(field, n, s));
            }
            let sigma = SemiLinearMap::parse(field, &read(&PathBuf::from(spec))?)?;
            if sigma.n() != n {
                return Err(CliError::Lib(sigma_lcd::Error::LengthMismatch {
                    expected: n,
                    got: sigma.n(),
                }));
            }
            Ok(sigma)
        }
    }
}

pub fn lcd(cmd: LcdCmd, _g: &Global) -> CliResult<RunReport> {
    match cmd {
        LcdCmd::Check { code, sigma, test } => {
            let c = load_code(&code)?;
            let s = resolve_sigma(&sigma, c.field(), c.n())?;
            let mut r = RunReport::new("lcd check");
            r.input("code", code.display()).input("parsed", describe(&c)).input("sigma", &sigma);
            let verdict = match test {
                Test::Lcd => is_sigma_lcd(&c, &s)?,
                Test::So => is_sigma_self_orthogonal(&c, &s)?,
                Test::Sd => is_sigma_self_dual(&c, &s)?,
            };
            let h = hull_dim(&c, &s)?;
            let brute = brute_intersection_dim(&c, &sigma_dual(&c, &s)?)?;
            r.set("test", test.name()).set("hull_dim", h).set("oracle_hull_dim", brute);
            r.verdict(verdict).check(brute == h && test.from_hull(brute, c.k(), c.n()) == verdict);
            Ok(r)
        }
        LcdCmd::Hull { code, sigma } => {
            let c = load_code(&code)?;
            let s = resolve_sigma(&sigma, c.field(), c.n())?;
            let mut r = RunReport::new("lcd hull");
            r.input("code", code.display()).input("parsed", describe(&c)).input("sigma", &sigma);
            let h = hull_dim(&c, &s)?;
            let brute = brute_intersection_dim(&c, &sigma_dual(&c, &s)?)?;
            r.set("hull_dim", h).set("oracle_hull_dim", brute).check(h == brute);
            Ok(r)
        }
        LcdCmd::Make { code } => {
            let c = load_code(&code)?;
            let mut r = RunReport::new("lcd make");
            r.input("code", code.display()).input("parsed", describe(&c));
            let w = make_lcd_sigma(&c);
            let lcd = is_sigma_lcd(&w.code, &w.sigma)?;
            let brute = brute_intersection_dim(&w.code, &sigma_dual(&w.code, &w.sigma)?)?;
            r.set("n", w.code.n())
                .set("permutation_only", w.sigma.is_permutation())
                .set("sigma", w.sigma.to_text().trim_end())
                .set("code", w.code.to_text().trim_end())
                .verdict(lcd)
                .check(brute == 0);
            Ok(r)
        }
        LcdCmd::Normalize { code } => {
            let c = load_code(&code)?;
            let mut r = RunReport::new("lcd normalize");
            r.input("code", code.display()).input("parsed", describe(&c));
            let nf = normalize_hull(&c);
            let h = hull_dim(&c, &SemiLinearMap::identity(c.field(), c.n()))?;
            let rows: Vec<String> = nf
                .generator
                .row_vecs()
                .iter()
                .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
                .collect();
            r.set("hull_dim", nf.h)
                .set("pi", nf.pi.to_text().trim_end())
                .set("generator", rows.join("\n"))
                .check(h == nf.h);
            Ok(r)
        }
    }
}

fn opt(d: Option<usize>) -> String {
    d.map_or_else(|| "unknown".to_string(), |d| d.to_string())
}

pub fn lcp(cmd: LcpCmd, g: &Global) -> CliResult<RunReport> {
    let LcpCmd::Build { c1, c2 } = cmd;
    let a = load_code(&c1)?;
    let b = load_code(&c2)?;
    let mut r = RunReport::new("lcp build");
    r.input("c1", c1.display())
        .input("c1_parsed", describe(&a))
        .input("c2", c2.display())
        .input("c2_parsed", describe(&b));
    let pair = build_lcp_with_budget(&a, &b, &budget(g))?;
    let inter = brute_intersection_dim(&pair.c1, &pair.c2)?;
    r.set("n", pair.n)
        .set("k", pair.k)
        .set("d1", opt(pair.d1))
        .set("d2", opt(pair.d2))
        .set("sigma", pair.sigma.to_text().trim_end())
        .set("c2", pair.c2.to_text().trim_end())
        .set("intersection_dim", inter);
    let ok = inter == 0 && pair.c1.k() + pair.c2.k() == pair.n;
    r.verdict(ok).check(ok);
    Ok(r)
}

fn load_gqc(path: &PathBuf) -> CliResult<GqcCode> {
    Ok(GqcCode::parse(&read(path)?)?)
}

fn describe_gqc(c: &GqcCode) -> String {
    let blocks: Vec<String> = c.blocks().iter().map(|b| b.to_string()).collect();
    format!(
        "blocks ({}) over GF({}), flat [{}, {}]",
        blocks.join(","),
        c.field().order(),
        c.n(),
        c.flat().k()
    )
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn gqc(cmd: GqcCmd, g: &Global) -> CliResult<RunReport> {
    match cmd {
        GqcCmd::Cosets { q, m } => {
            let f = sigma_lcd::algebra::Field::with_order(q)?;
            CyclotomicContext::new(&f, m)?;
            let mut r = RunReport::new("gqc cosets");
            r.input("q", q).input("m", m);
            let cosets = cyclotomic_cosets(q, m);
            r.set("count", cosets.len());
            for c in &cosets {
                r.set(&format!("coset.{}", c[0]), join(c));
            }
            Ok(r)
        }
        GqcCmd::Gamma { q, m } => {
            let f = sigma_lcd::algebra::Field::with_order(q)?;
            let ctx = CyclotomicContext::new(&f, m)?;
            let gp = ctx.gamma_partition();
            let mut r = RunReport::new("gqc gamma");
            r.input("q", q).input("m", m);
            r.set("zero_plus", join(&gp.zero_plus))
                .set("zero_minus", join(&gp.zero_minus))
                .set("one", join(&gp.one))
                .set("neg_one", join(&gp.neg_one));
            Ok(r)
        }
        GqcCmd::Constituents { file } => {
            let c = load_gqc(&file)?;
            let ctx = c.context()?;
            let mut r = RunReport::new("gqc constituents");
            r.input("file", file.display()).input("parsed", describe_gqc(&c));
            let cons = constituents(&c, &ctx)?;
            let mut total = 0;
            for k in &cons {
                total += k.degree() * k.dim();
                r.set(
                    &format!("constituent.{}", k.index()),
                    format!("dim {} of {}, degree {}", k.dim(), k.ambient_dim(), k.degree()),
                );
            }
            r.set("sum_degree_dim", total).check(total == c.flat().k());
            Ok(r)
        }
        GqcCmd::Check { file, a, test } => {
            let c = load_gqc(&file)?;
            let ctx = c.context()?;
            let mut r = RunReport::new("gqc check");
            r.input("file", file.display()).input("parsed", describe_gqc(&c)).input("a", a);
            let verdict = match test {
                Test::Lcd => is_mua_lcd(&c, &ctx, a)?,
                Test::So => is_mua_self_orthogonal(&c, &ctx, a)?,
                Test::Sd => is_mua_self_dual(&c, &ctx, a)?,
            };
            let flat = c.flat();
            let brute = brute_intersection_dim(flat, &sigma_dual(flat, &c.mu_a_map(a)?)?)?;
            r.set("test", test.name()).set("oracle_hull_dim", brute);
            r.verdict(verdict).check(test.from_hull(brute, flat.k(), flat.n()) == verdict);
            Ok(r)
        }
        GqcCmd::Onegen { file, a } => {
            let c = load_gqc(&file)?;
            let og = OneGenerator::from_code(&c)?;
            let ctx = c.context()?;
            let mut r = RunReport::new("gqc onegen");
            r.input("file", file.display()).input("parsed", describe_gqc(&c)).input("a", a);
            let lcd = one_gen_lcd(&og, &ctx, a)?;
            let so = one_gen_self_orthogonal(&og, &ctx, a)?;
            let flat = c.flat();
            let brute = brute_intersection_dim(flat, &sigma_dual(flat, &c.mu_a_map(a)?)?)?;
            r.set("lcd", lcd).set("self_orthogonal", so).set("oracle_hull_dim", brute);
            let mut agree = (brute == 0) == lcd && (brute == flat.k()) == so;
            if c.is_quasi_cyclic() {
                let by_gcd = one_gen_lcd_gcd(&og, a)?;
                r.set("lcd_gcd_form", by_gcd);
                agree &= by_gcd == lcd;
                let mc = maximal_one_gen_check(&og, a)?;
                r.set("maximal", mc.maximal);
                if let Some(p) = mc.canonical {
                    r.set("canonical", p.to_text());
                }
            }
            r.verdict(lcd).check(agree);
            Ok(r)
        }
        GqcCmd::Product { spec } => {
            let (base, comps) = parse_product_spec(&read(&spec)?)?;
            let mut r = RunReport::new("gqc product");
            r.input("spec", spec.display()).input("base", base.order());
            for (j, c) in comps.iter().enumerate() {
                r.input(&format!("component.{j}"), format!("m={} {}", c.m, describe(&c.code)));
            }
            let out = product_lcd_gqc_with_budget(&base, &comps, &budget(g))?;
            r.set("n", out.code.n())
                .set("dimension", out.dimension)
                .set("rate", format!("{:.4}", out.rate()))
                .set("distance_bound", opt(out.distance_bound));
            let flat = out.code.flat();
            let brute = brute_intersection_dim(flat, &sigma_dual(flat, &out.code.mu_a_map(-1)?)?)?;
            let mut agree = brute == 0;
            if let Ok(d) = brute_min_distance_parallel(flat, &budget(g), g.jobs) {
                r.set("min_distance", d);
                agree &= out.distance_bound.map_or(true, |b| d >= b);
            }
            r.set("code", out.code.to_text().trim_end());
            r.verdict(brute == 0).check(agree);
            Ok(r)
        }
    }
}

/// Base field on the first line, then per component a `component <m>`
/// line followed by a code in code-file form.
pub fn parse_product_spec(text: &str) -> CliResult<(FieldRef, Vec<ProductComponent>)> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty())
        .peekable();
    let base = parse_field(lines.next().ok_or_else(|| CliError::Usage("empty product spec".into()))?)?;
    let mut comps = Vec::new();
    while let Some(line) = lines.next() {
        let m = line
            .strip_prefix("component")
            .and_then(|m| m.trim().parse::<usize>().ok())
            .ok_or_else(|| CliError::Usage(format!("expected 'component <m>', got '{line}'")))?;
        let mut body = Vec::new();
        while let Some(l) = lines.peek() {
            if l.starts_with("component") {
                break;
            }
            body.push(lines.next().unwrap());
        }
        let code = LinearCode::parse(&body.join("\n"))?;
        comps.push(ProductComponent { m, code });
    }
    Ok((base, comps))
}

pub fn abelian(cmd: AbelianCmd, _g: &Global) -> CliResult<RunReport> {
    let (group, code, name) = match cmd {
        AbelianCmd::Check { group, code } => (group, code, "abelian check"),
        AbelianCmd::Idempotent { group, code } => (group, code, "abelian idempotent"),
    };
    let grp = AbelianGroup::parse(&group)?;
    let c = load_code(&code)?;
    let mut r = RunReport::new(name);
    r.input("group", &grp).input("code", code.display()).input("parsed", describe(&c));
    let brute = brute_intersection_dim(&c, &sigma_dual(&c, &mu_minus1_map(c.field(), &grp))?)?;
    if name == "abelian check" {
        let lcd = is_abelian_mu1_lcd(&c, &grp)?;
        r.set("mu1_lcd", lcd).set("oracle_hull_dim", brute);
        r.verdict(lcd).check((brute == 0) == lcd);
    } else {
        let e = find_idempotent_generator(&c, &grp)?;
        match &e {
            Some(e) => r.set("idempotent", e.to_text()),
            None => r.set("idempotent", "none"),
        };
        r.set("oracle_hull_dim", brute);
        r.verdict(e.is_some()).check((brute == 0) == e.is_some());
    }
    Ok(r)
}

pub fn oracle(cmd: OracleCmd, g: &Global) -> CliResult<RunReport> {
    match cmd {
        OracleCmd::Mindist { file } => {
            let c = load_code(&file)?;
            let mut r = RunReport::new("oracle mindist");
            r.input("file", file.display()).input("parsed", describe(&c));
            r.set("min_distance", brute_min_distance_parallel(&c, &budget(g), g.jobs)?);
            Ok(r)
        }
        OracleCmd::Intersect { file1, file2 } => {
            let a = load_code(&file1)?;
            let b = load_code(&file2)?;
            let mut r = RunReport::new("oracle intersect");
            r.input("file1", file1.display())
                .input("file2", file2.display())
                .set("intersection_dim", brute_intersection_dim(&a, &b)?);
            Ok(r)
        }
        OracleCmd::SearchSigma { file, family } => {
            let c = load_code(&file)?;
            let fam = SigmaFamily::parse(&family)?;
            let mut r = RunReport::new("oracle search-sigma");
            r.input("file", file.display()).input("parsed", describe(&c)).input("family", &family);
            match exhaustive_sigma_search(&c, fam, &budget(g)) {
                Some(s) => {
                    let h = hull_dim(&c, &s)?;
                    r.set("sigma", s.to_text().trim_end()).verdict(true).check(h == 0);
                }
                None => {
                    r.set("sigma", "none").verdict(false);
                }
            }
            Ok(r)
        }
    }
}
