//! Scan experiments, verification suites, and catalog-wide conjecture
//! checking — the engine behind the CLI.
//!
//! Everything here is deterministic: scans split [1, x] into contiguous
//! chunks whose results are merged in index order, suites collect failures
//! in parameter order, and report text never depends on the worker count.

use std::fmt;
use std::io::{self, BufRead, Write};
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::arith::{is_prime, lcm, mod_pow, ExactRational, SpfSieve};
use crate::formulas::{
    average_period_cyclic, check_extremal_family, check_majorization, check_nilpotent_bound,
    check_product_bound, n_cyclic, n_dihedral, n_from_spectrum, n_sl2,
    n_sl2_prime_field_expansion, odd_indicator, FormulaError,
};
use crate::graph::{self, build, decompose};
use crate::groups::{load_catalog, CatalogError, GroupError, GroupSpec};
use crate::spectrum::OrderSpectrum;

/// Hard cap on scan length; the sieve and the row buffer stay reasonable.
pub const SCAN_BUDGET: u64 = 10_000_000;

#[derive(Debug)]
pub enum HarnessError {
    ScanBudget { x: u64 },
    UnknownSuite(String),
    Group(GroupError),
    Formula(FormulaError),
    Catalog(CatalogError),
}

impl fmt::Display for HarnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HarnessError::ScanBudget { x } => {
                write!(f, "scan length {x} exceeds the budget of {SCAN_BUDGET}")
            }
            HarnessError::UnknownSuite(name) => write!(f, "unknown suite '{name}'"),
            HarnessError::Group(e) => write!(f, "{e}"),
            HarnessError::Formula(e) => write!(f, "{e}"),
            HarnessError::Catalog(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for HarnessError {}

impl From<GroupError> for HarnessError {
    fn from(e: GroupError) -> HarnessError {
        HarnessError::Group(e)
    }
}

impl From<FormulaError> for HarnessError {
    fn from(e: FormulaError) -> HarnessError {
        HarnessError::Formula(e)
    }
}

impl From<CatalogError> for HarnessError {
    fn from(e: CatalogError) -> HarnessError {
        HarnessError::Catalog(e)
    }
}

/// One row of a cyclic scan: the cycle count of x ↦ x^a on C_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanRow {
    pub n: u64,
    pub count: u64,
}

impl ScanRow {
    pub fn ratio(&self) -> ExactRational {
        ExactRational::ratio(self.count, self.n)
    }

    /// count/n rounded half-up to six decimal digits, locale-free.
    fn ratio_decimal(&self) -> String {
        let micro = (u128::from(self.count) * 2_000_000 + u128::from(self.n))
            / (2 * u128::from(self.n));
        format!("{}.{:06}", micro / 1_000_000, micro % 1_000_000)
    }
}

/// A completed scan: all rows for 1 ≤ n ≤ x plus their exact average.
#[derive(Debug, Clone)]
pub struct Scan {
    pub average: ExactRational,
    pub rows: Vec<ScanRow>,
}

/// Exact average (1/x) Σ_{n≤x} N(a, C_n), with one row per n.
///
/// Per n the count is Σ_{d | ρ(n)} φ(d)/ord_d(a); divisors of ρ(n) are
/// walked from the sieve factorization, with ord_d(a) assembled as an lcm
/// of precomputed prime-power orders (ord mod p lifted through p^j).
pub fn scan_cyclic_average(x: u64, a: u64) -> Result<Scan, HarnessError> {
    assert!(x >= 1 && a >= 1);
    if x > SCAN_BUDGET {
        return Err(HarnessError::ScanBudget { x });
    }
    let spf = SpfSieve::new(x as usize);
    // ord[v] = ord_v(a) for prime powers v ≤ x coprime to a; 0 elsewhere.
    let mut ord = vec![0u32; x as usize + 1];
    for p in 2..=x {
        if !spf.is_prime(p) || a % p == 0 {
            continue;
        }
        let mut o = prime_order(a, p, &spf);
        ord[p as usize] = o as u32;
        let mut v = p;
        while v <= x / p {
            v *= p;
            // ord mod p^{j+1} is ord mod p^j, times p if a^ord ≠ 1 there.
            if mod_pow(a % v, o, v) != 1 {
                o *= p;
            }
            ord[v as usize] = o as u32;
        }
    }

    const CHUNK: u64 = 4096;
    let chunks = x.div_ceil(CHUNK);
    let parts: Vec<(u64, Vec<ScanRow>)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * CHUNK + 1;
            let hi = (lo + CHUNK - 1).min(x);
            let mut rows = Vec::with_capacity((hi - lo + 1) as usize);
            let mut sum = 0u64;
            // (φ(d), ord_d(a)) for every divisor d of ρ(n), built one
            // prime power at a time.
            let mut divs: Vec<(u64, u64)> = Vec::new();
            for n in lo..=hi {
                divs.clear();
                divs.push((1, 1));
                for &(p, e) in spf.factorize(n).prime_powers() {
                    if a % p == 0 {
                        continue;
                    }
                    let base = divs.len();
                    let mut phi = p - 1;
                    let mut q = p;
                    for _ in 0..e {
                        for i in 0..base {
                            let (f, o) = divs[i];
                            divs.push((f * phi, lcm(o, u64::from(ord[q as usize]))));
                        }
                        phi *= p;
                        q *= p;
                    }
                }
                let count: u64 = divs.iter().map(|&(f, o)| f / o).sum();
                rows.push(ScanRow { n, count });
                sum += count;
            }
            (sum, rows)
        })
        .collect();

    let mut rows = Vec::with_capacity(x as usize);
    let mut sum = 0u128;
    for (s, r) in parts {
        sum += u128::from(s);
        rows.extend(r);
    }
    Ok(Scan {
        average: ExactRational::new(BigInt::from(sum), x.into()),
        rows,
    })
}

/// ord_p(a) for prime p coprime to a, stripping primes from p − 1.
fn prime_order(a: u64, p: u64, spf: &SpfSieve) -> u64 {
    let mut k = p - 1;
    for &(q, _) in spf.factorize(p - 1).prime_powers() {
        while k % q == 0 && mod_pow(a % p, k / q, p) == 1 {
            k /= q;
        }
    }
    debug_assert_eq!(mod_pow(a % p, k, p), 1);
    k
}

/// CSV with header `n,N,ratio`, LF endings, six-digit ratios.
pub fn write_scan_csv<W: Write>(rows: &[ScanRow], mut w: W) -> io::Result<()> {
    w.write_all(b"n,N,ratio\n")?;
    for row in rows {
        writeln!(w, "{},{},{}", row.n, row.count, row.ratio_decimal())?;
    }
    Ok(())
}

/// The nine named verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Dihedral,
    Sl2,
    Product,
    Nilpotent,
    Majorization,
    Extremal,
    Period,
    Tails,
    Certificate,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Dihedral,
        Suite::Sl2,
        Suite::Product,
        Suite::Nilpotent,
        Suite::Majorization,
        Suite::Extremal,
        Suite::Period,
        Suite::Tails,
        Suite::Certificate,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Dihedral => "dihedral",
            Suite::Sl2 => "sl2",
            Suite::Product => "product",
            Suite::Nilpotent => "nilpotent",
            Suite::Majorization => "majorization",
            Suite::Extremal => "extremal",
            Suite::Period => "period",
            Suite::Tails => "tails",
            Suite::Certificate => "certificate",
        }
    }
}

impl FromStr for Suite {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Suite, HarnessError> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| HarnessError::UnknownSuite(s.to_string()))
    }
}

/// Outcome of one suite (or one conjecture run): pass/fail per case,
/// failures and notes kept verbatim, wall time on the side.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub suite: String,
    pub ranges: String,
    pub cases: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    /// One PASS/FAIL line, then any failure and note lines indented.
    /// Deterministic: the wall-time field is not rendered.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} [{}] cases={}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.suite,
            self.ranges,
            self.cases
        )?;
        for line in &self.failures {
            write!(f, "\n  FAIL {line}")?;
        }
        for line in &self.notes {
            write!(f, "\n  note {line}")?;
        }
        Ok(())
    }
}

/// Report lines for each suite plus the final `suites=<k> failures=<m>`.
pub fn summarize(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    let failures: usize = reports.iter().map(|r| r.failures.len()).sum();
    out.push_str(&format!("suites={} failures={}\n", reports.len(), failures));
    out
}

/// Runs one suite. `n_max` bounds the size-like parameter (cyclic order,
/// dihedral rotations, pool group order, or exponent k for the extremal
/// family), `a_max` the power; `None` picks the suite's standard range.
pub fn verify_suite(
    suite: Suite,
    n_max: Option<u64>,
    a_max: Option<u64>,
) -> Result<VerificationReport, HarnessError> {
    let start = Instant::now();
    let mut report = match suite {
        Suite::Dihedral => suite_dihedral(n_max.unwrap_or(300), a_max.unwrap_or(12)),
        Suite::Sl2 => suite_sl2(a_max.unwrap_or(10)),
        Suite::Product => suite_product(n_max.unwrap_or(300), a_max.unwrap_or(5)),
        Suite::Nilpotent => suite_nilpotent(n_max.unwrap_or(729), a_max.unwrap_or(20)),
        Suite::Majorization => suite_majorization(n_max.unwrap_or(729)),
        Suite::Extremal => suite_extremal(n_max.unwrap_or(20)),
        Suite::Period => suite_period(n_max.unwrap_or(300), a_max.unwrap_or(12)),
        Suite::Tails => suite_tails(n_max.unwrap_or(300), a_max.unwrap_or(12)),
        Suite::Certificate => suite_certificate(a_max.unwrap_or(20)),
    }?;
    report.elapsed = start.elapsed();
    Ok(report)
}

fn blank_report(suite: &str, ranges: String) -> VerificationReport {
    VerificationReport {
        suite: suite.to_string(),
        ranges,
        cases: 0,
        failures: Vec::new(),
        notes: Vec::new(),
        elapsed: Duration::ZERO,
    }
}

/// Dihedral closed form vs enumeration, plus the parity identity
/// N(a, D_n) = N(a, C_n) + (n if a odd).
fn suite_dihedral(n_max: u64, a_max: u64) -> Result<VerificationReport, HarnessError> {
    let mut report = blank_report("dihedral", format!("n=3..={n_max} a=2..={a_max}"));
    let per_n: Vec<(usize, Vec<String>)> = (3..=n_max)
        .into_par_iter()
        .map(|n| -> Result<(usize, Vec<String>), HarnessError> {
            let g = GroupSpec::Dihedral(n).realize()?;
            let mut failures = Vec::new();
            let mut cases = 0;
            for a in 2..=a_max {
                cases += 1;
                let formula = n_dihedral(n, a).value;
                let brute = decompose(&build(&g, a)).component_count();
                let parity = n_cyclic(n, a).value + odd_indicator(a) * n;
                if formula != brute.into() || formula != parity {
                    failures.push(format!(
                        "dihedral n={n} a={a} formula={formula} brute={brute} parity={parity}"
                    ));
                }
            }
            Ok((cases, failures))
        })
        .collect::<Result<_, _>>()?;
    for (cases, failures) in per_n {
        report.cases += cases;
        report.failures.extend(failures);
    }
    Ok(report)
}

/// SL₂ closed form vs census spectrum vs enumeration over the realizable
/// fields; the prime-field expansion is evaluated alongside and every
/// disagreement is logged as a note with the brute-force arbiter's value.
fn suite_sl2(a_max: u64) -> Result<VerificationReport, HarnessError> {
    const FIELDS: [u64; 6] = [3, 5, 7, 9, 11, 13];
    let mut report = blank_report("sl2", format!("q={{3,5,7,9,11,13}} a=2..={a_max}"));
    let per_q: Vec<(usize, Vec<String>, Vec<String>)> = FIELDS
        .into_par_iter()
        .map(|q| -> Result<_, HarnessError> {
            let g = GroupSpec::Sl2(q).realize()?;
            let census = OrderSpectrum::sl2(q)?;
            let prime_field = is_prime(q);
            let mut failures = Vec::new();
            let mut notes = Vec::new();
            let mut cases = 0;
            for a in 2..=a_max {
                cases += 1;
                let formula = n_sl2(q, a)?.value;
                let spectral = n_from_spectrum(&census, a)?.value;
                let brute = decompose(&build(&g, a)).component_count();
                if formula != spectral || formula != brute.into() {
                    failures.push(format!(
                        "sl2 q={q} a={a} formula={formula} census={spectral} brute={brute}"
                    ));
                }
                if prime_field && a % q != 0 {
                    let expansion = n_sl2_prime_field_expansion(q, a)?;
                    if expansion != BigInt::from(formula.clone()) {
                        notes.push(format!(
                            "sl2 remark q={q} a={a} expansion={expansion} formula={formula} brute={brute}"
                        ));
                    }
                }
            }
            Ok((cases, failures, notes))
        })
        .collect::<Result<_, _>>()?;
    for (cases, failures, notes) in per_q {
        report.cases += cases;
        report.failures.extend(failures);
        report.notes.extend(notes);
    }
    Ok(report)
}

/// 100 deterministic cyclic pairs for the product inequality.
fn suite_product(modulus_cap: u64, a_max: u64) -> Result<VerificationReport, HarnessError> {
    let exponents: Vec<u64> = [2, 3, 5].into_iter().filter(|&a| a <= a_max).collect();
    let mut report = blank_report(
        "product",
        format!("pairs=100 m,k<={modulus_cap} a={exponents:?}"),
    );
    let per_pair: Vec<(usize, Vec<String>)> = (1..=100u64)
        .into_par_iter()
        .map(|i| -> Result<_, HarnessError> {
            let m = i * 37 % modulus_cap + 1;
            let k = i * 61 % modulus_cap + 1;
            let sm = OrderSpectrum::cyclic(m);
            let sk = OrderSpectrum::cyclic(k);
            let mut failures = Vec::new();
            let mut cases = 0;
            for &a in &exponents {
                cases += 1;
                let r = check_product_bound(&sm, &sk, a)?;
                if !r.holds {
                    failures.push(format!("product m={m} k={k} a={a} {r}"));
                }
            }
            Ok((cases, failures))
        })
        .collect::<Result<_, _>>()?;
    for (cases, failures) in per_pair {
        report.cases += cases;
        report.failures.extend(failures);
    }
    Ok(report)
}

/// Built-in p-group atoms of order ≤ cap plus all direct products (of any
/// mix of atoms) that stay within cap, labeled and deduplicated by name.
fn nilpotent_pool(cap: u64) -> Result<Vec<(String, OrderSpectrum)>, HarnessError> {
    let mut atoms: Vec<(String, OrderSpectrum, u64)> = Vec::new();
    let spf = SpfSieve::new(cap as usize);
    for q in 2..=cap {
        if spf.factorize(q).prime_powers().len() == 1 {
            atoms.push((format!("C{q}"), OrderSpectrum::cyclic(q), q));
        }
    }
    let mut n = 4;
    while 2 * n <= cap {
        atoms.push((format!("D{n}"), OrderSpectrum::dihedral(n), 2 * n));
        n *= 2;
    }
    if cap >= 8 {
        let q8 = GroupSpec::Permutation {
            degree: 8,
            generators: vec![
                vec![2, 3, 1, 0, 6, 7, 5, 4],
                vec![4, 5, 7, 6, 1, 0, 2, 3],
            ],
            name: "Q8".into(),
        }
        .realize()?;
        atoms.push(("Q8".into(), OrderSpectrum::bruteforce(&q8), 8));
    }
    for p in [3u64, 5, 7] {
        if p.pow(3) <= cap {
            let g = GroupSpec::Heisenberg(p).realize()?;
            atoms.push((format!("Heis({p})"), OrderSpectrum::bruteforce(&g), p.pow(3)));
        }
    }
    atoms.sort_by(|x, y| (x.2, x.0.clone()).cmp(&(y.2, y.0.clone())));

    // Depth-first multiset products over the sorted atoms.
    let mut pool: Vec<(String, OrderSpectrum)> = Vec::new();
    let mut stack: Vec<(usize, String, OrderSpectrum, u64)> = atoms
        .iter()
        .enumerate()
        .map(|(i, (name, s, o))| (i, name.clone(), s.clone(), *o))
        .collect();
    while let Some((i, name, spectrum, order)) = stack.pop() {
        for (j, (aname, aspec, aorder)) in atoms.iter().enumerate().skip(i) {
            if order * aorder <= cap {
                stack.push((
                    j,
                    format!("{name}x{aname}"),
                    OrderSpectrum::product(&spectrum, aspec),
                    order * aorder,
                ));
            }
        }
        pool.push((name, spectrum));
    }
    pool.sort_by(|x, y| x.0.cmp(&y.0));
    pool.dedup_by(|x, y| x.0 == y.0);
    Ok(pool)
}

/// Cyclic-minimality for every pool group: N(a, G) ≥ N(a, C_|G|).
fn suite_nilpotent(order_cap: u64, a_max: u64) -> Result<VerificationReport, HarnessError> {
    let pool = nilpotent_pool(order_cap)?;
    let mut report = blank_report(
        "nilpotent",
        format!("pool={} order<={order_cap} a=2..={a_max}", pool.len()),
    );
    let per_group: Vec<(usize, Vec<String>)> = pool
        .par_iter()
        .map(|(name, s)| -> Result<_, HarnessError> {
            let mut failures = Vec::new();
            let mut cases = 0;
            for a in 2..=a_max {
                cases += 1;
                let r = check_nilpotent_bound(s, a)?;
                if !r.holds {
                    failures.push(format!("nilpotent {name} a={a} {r}"));
                }
            }
            Ok((cases, failures))
        })
        .collect::<Result<_, _>>()?;
    for (cases, failures) in per_group {
        report.cases += cases;
        report.failures.extend(failures);
    }
    Ok(report)
}

/// Order majorization against the cyclic group, for the prime-power-order
/// part of the pool (the bound is proven for p-groups only).
fn suite_majorization(order_cap: u64) -> Result<VerificationReport, HarnessError> {
    let pool = nilpotent_pool(order_cap)?;
    let mut cases = 0;
    let mut failures = Vec::new();
    for (name, s) in &pool {
        match check_majorization(s) {
            Ok(r) => {
                cases += 1;
                if !r.holds {
                    failures.push(format!("majorization {name} {r}"));
                }
            }
            Err(FormulaError::NotAPrimePower { .. }) => {} // mixed-prime product
            Err(e) => return Err(e.into()),
        }
    }
    let mut report = blank_report(
        "majorization",
        format!("p-groups={cases} order<={order_cap}"),
    );
    report.cases = cases;
    report.failures = failures;
    Ok(report)
}

/// The n = a^k − 1 family for bases 2 and 3.
fn suite_extremal(k_max: u64) -> Result<VerificationReport, HarnessError> {
    let mut report = blank_report("extremal", format!("a={{2,3}} k=1..={k_max}"));
    for a in [2u64, 3] {
        for k in 1..=k_max {
            let Ok(k) = u32::try_from(k) else {
                report.notes.push(format!("extremal a={a} k={k} skipped: k out of range"));
                continue;
            };
            match check_extremal_family(a, k) {
                Ok(r) => {
                    report.cases += 1;
                    if !r.holds {
                        report.failures.push(format!("extremal a={a} k={k} {r}"));
                    }
                }
                // a^k past u64 is out of the factorization budget, not a
                // counterexample.
                Err(FormulaError::Unsupported(what)) => {
                    report.notes.push(format!("extremal a={a} k={k} skipped: {what}"));
                }
                Err(e) => return Err(e.into()),
            }
        }
    }
    Ok(report)
}

/// Closed-form average period vs the graph-side average on C_n.
fn suite_period(n_max: u64, a_max: u64) -> Result<VerificationReport, HarnessError> {
    let mut report = blank_report("period", format!("n=1..={n_max} a=2..={a_max}"));
    let per_n: Vec<(usize, Vec<String>)> = (1..=n_max)
        .into_par_iter()
        .map(|n| -> Result<_, HarnessError> {
            let g = GroupSpec::Cyclic(n).realize()?;
            let mut failures = Vec::new();
            let mut cases = 0;
            for a in 2..=a_max {
                cases += 1;
                let formula = average_period_cyclic(n, a);
                let graph_side = graph::average_period(&decompose(&build(&g, a)));
                if formula != graph_side {
                    failures.push(format!(
                        "period n={n} a={a} formula={formula} graph={graph_side}"
                    ));
                }
            }
            Ok((cases, failures))
        })
        .collect::<Result<_, _>>()?;
    for (cases, failures) in per_n {
        report.cases += cases;
        report.failures.extend(failures);
    }
    Ok(report)
}

/// Tails of cyclic power maps are uniform: every purely periodic node
/// carries the same hanging tree.
fn suite_tails(n_max: u64, a_max: u64) -> Result<VerificationReport, HarnessError> {
    let mut report = blank_report("tails", format!("n=1..={n_max} a=2..={a_max}"));
    let per_n: Vec<(usize, Vec<String>)> = (1..=n_max)
        .into_par_iter()
        .map(|n| -> Result<_, HarnessError> {
            let g = GroupSpec::Cyclic(n).realize()?;
            let mut failures = Vec::new();
            let mut cases = 0;
            for a in 2..=a_max {
                cases += 1;
                let pg = build(&g, a);
                if !graph::tails_uniform(&pg, &decompose(&pg)) {
                    failures.push(format!("tails n={n} a={a} not uniform"));
                }
            }
            Ok((cases, failures))
        })
        .collect::<Result<_, _>>()?;
    for (cases, failures) in per_n {
        report.cases += cases;
        report.failures.extend(failures);
    }
    Ok(report)
}

/// C₃×C₃×C₃ and Heisenberg(3) have isomorphic power-map graphs for every
/// exponent; one dissimilar pair guards against a trivially-equal
/// certificate.
fn suite_certificate(a_max: u64) -> Result<VerificationReport, HarnessError> {
    let mut report = blank_report("certificate", format!("a=2..={a_max}"));
    let elementary = GroupSpec::parse("product:cyclic:3+cyclic:3+cyclic:3")
        .unwrap()
        .realize()?;
    let heis = GroupSpec::Heisenberg(3).realize()?;
    for a in 2..=a_max {
        report.cases += 1;
        let pe = build(&elementary, a);
        let ph = build(&heis, a);
        let ce = graph::certificate(&pe, &decompose(&pe));
        let ch = graph::certificate(&ph, &decompose(&ph));
        if ce != ch {
            report
                .failures
                .push(format!("certificate C3xC3xC3 vs Heis(3) a={a} differ"));
        }
    }
    report.cases += 1;
    let c10 = GroupSpec::Cyclic(10).realize()?;
    let p2 = build(&c10, 2);
    let p3 = build(&c10, 3);
    if graph::certificate(&p2, &decompose(&p2)) == graph::certificate(&p3, &decompose(&p3)) {
        report
            .failures
            .push("certificate C10 a=2 vs a=3 should differ".into());
    }
    Ok(report)
}

/// Checks N(a, G) ≥ N(a, C_|G|) for every catalog group and a ∈ 2..=a_max;
/// counterexamples are listed verbatim.
pub fn verify_conjecture<R: BufRead>(
    catalog: R,
    a_max: u64,
) -> Result<VerificationReport, HarnessError> {
    let start = Instant::now();
    let entries = load_catalog(catalog)?;
    let mut report = blank_report(
        "conjecture",
        format!("groups={} a=2..={a_max}", entries.len()),
    );
    let per_group: Vec<(usize, Vec<String>)> = entries
        .par_iter()
        .map(|(name, spec)| -> Result<_, HarnessError> {
            let g = spec.realize()?;
            let s = OrderSpectrum::bruteforce(&g);
            let mut failures = Vec::new();
            let mut cases = 0;
            for a in 2..=a_max {
                cases += 1;
                let r = check_nilpotent_bound(&s, a)?;
                if !r.holds {
                    failures.push(format!("conjecture {name} |G|={} a={a} {r}", g.order()));
                }
            }
            Ok((cases, failures))
        })
        .collect::<Result<_, _>>()?;
    for (cases, failures) in per_group {
        report.cases += cases;
        report.failures.extend(failures);
    }
    report.elapsed = start.elapsed();
    Ok(report)
}
