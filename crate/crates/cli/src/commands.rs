use std::fmt;
use std::path::Path;
use std::process::ExitCode;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use polycount::asymptotics::{summarize, sweep, to_csv, BoundCheck, DeltaVariant, Family, SweepSpec};
use polycount::counts::patterns::partitions_listing;
use polycount::counts::{CountEngine, CountRow, Params};
use polycount::oracle::{count_rel_irred_oracle, prime_power, sieve_irreducible, sieve_powerful, sieve_reducible, FieldSpec};
use polycount::{Counts, QPoly};

use crate::Format;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or a refused computation.
    Invalid(String),
    Io(std::io::Error),
    /// A count that should be an integer is not.
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            Self::Invalid(_) => ExitCode::from(2),
            Self::Io(_) | Self::Internal(_) => ExitCode::from(3),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Invalid(m) => f.write_str(m),
            Self::Io(e) => write!(f, "i/o error: {e}"),
            Self::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl From<polycount::Error> for CliError {
    fn from(e: polycount::Error) -> Self {
        Self::Invalid(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::Io(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyArg {
    P,
    I,
    R,
    S,
    Q,
    A,
    E,
}

impl FromStr for FamilyArg {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s.trim() {
            "P" => Self::P,
            "I" => Self::I,
            "R" => Self::R,
            "S" => Self::S,
            "Q" => Self::Q,
            "A" => Self::A,
            "E" => Self::E,
            other => return Err(format!("unknown family {other:?} (expected one of P,I,R,S,Q,A,E)")),
        })
    }
}

impl fmt::Display for FamilyArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FamilyArg {
    fn needs_power(self) -> bool {
        matches!(self, Self::S | Self::Q)
    }

    fn needs_extensions(self) -> bool {
        matches!(self, Self::A | Self::E)
    }

    fn pick(self, row: &CountRow) -> &QPoly {
        let missing = "engine computed every requested family";
        match self {
            Self::P => &row.all,
            Self::I => &row.irreducible,
            Self::R => &row.reducible,
            Self::S => row.powerfree.as_ref().expect(missing),
            Self::Q => row.powerful.as_ref().expect(missing),
            Self::A => row.abs_irreducible.as_ref().expect(missing),
            Self::E => row.rel_irreducible.as_ref().expect(missing),
        }
    }

    fn bound_family(self) -> Result<Family> {
        self.to_string()
            .parse()
            .map_err(|_| CliError::Invalid(format!("no bound check for family {self}")))
    }
}

fn build_engine(r: u32, nmax: usize, families: &[FamilyArg], s: Option<usize>) -> Result<Counts> {
    if families.is_empty() {
        return Err(CliError::Invalid("no families requested".into()));
    }
    if families.iter().any(|f| f.needs_power()) && s.is_none() {
        return Err(CliError::Invalid("families S and Q need --s".into()));
    }
    Ok(CountEngine::new(Params::new(r, nmax, s)?))
}

pub fn table(r: u32, nmax: usize, families: &[FamilyArg], s: Option<usize>, format: Format) -> Result<String> {
    let engine = build_engine(r, nmax.max(1), families, s)?;
    let mut report = engine.report(families.iter().any(|f| f.needs_extensions()));
    report.counts.truncate(nmax + 1);
    let mut out = String::new();
    match format {
        Format::Text | Format::Csv => {
            let sep = if format == Format::Csv { "," } else { "\t" };
            let header: Vec<String> = families.iter().map(ToString::to_string).collect();
            out.push_str(&format!("n{sep}{}\n", header.join(sep)));
            for row in &report.counts {
                let cells: Vec<String> = families.iter().map(|f| f.pick(row).to_string()).collect();
                out.push_str(&format!("{}{sep}{}\n", row.n, cells.join(sep)));
            }
        }
        Format::Json => {
            let keep: Vec<String> = families.iter().map(ToString::to_string).collect();
            let mut value = serde_json::to_value(&report).map_err(|e| CliError::Internal(e.to_string()))?;
            for row in value["counts"].as_array_mut().into_iter().flatten() {
                if let Some(obj) = row.as_object_mut() {
                    obj.retain(|k, _| k == "n" || keep.contains(k));
                }
            }
            out = serde_json::to_string_pretty(&value).map_err(|e| CliError::Internal(e.to_string()))?;
            out.push('\n');
        }
    }
    Ok(out)
}

pub fn eval(family: FamilyArg, r: u32, n: usize, s: Option<usize>, q: i64) -> Result<BigInt> {
    if q < 2 {
        return Err(CliError::Invalid(format!("need q >= 2, got {q}")));
    }
    if prime_power(q as u64).is_none() {
        eprintln!("polycount: warning: {q} is not a prime power; the value is not a field count");
    }
    let engine = build_engine(r, n.max(1), &[family], s)?;
    let poly: QPoly = match family {
        FamilyArg::P => polycount::counts::count_all(r, n),
        FamilyArg::I => engine.count_irreducible(n)?,
        FamilyArg::R => engine.count_reducible(n)?,
        FamilyArg::S => engine.count_powerfree(n)?,
        FamilyArg::Q => engine.count_powerful(n)?,
        FamilyArg::A => engine.count_abs_irreducible(n)?,
        FamilyArg::E => engine.count_rel_irreducible(n)?,
    };
    poly.eval_integer(q)
        .ok_or_else(|| CliError::Internal(format!("{family} at q = {q} has a nonzero fractional part")))
}

/// `2,3,5` or `2-6`.
fn parse_values<T: FromStr + Copy + Ord + num_traits::One + std::ops::Add<Output = T>>(flag: &str, s: &str) -> Result<Vec<T>> {
    let bad = || CliError::Invalid(format!("--{flag}: cannot parse {s:?}"));
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if let Some((lo, hi)) = s.split_once('-') {
        let lo: T = lo.trim().parse().map_err(|_| bad())?;
        let hi: T = hi.trim().parse().map_err(|_| bad())?;
        let mut out = Vec::new();
        let mut x = lo;
        while x <= hi {
            out.push(x);
            x = x + T::one();
        }
        return Ok(out);
    }
    s.split(',').map(|v| v.trim().parse().map_err(|_| bad())).collect()
}

pub fn sweep_spec(families: &[FamilyArg], r: &str, n: &str, s: &str, q: &str, delta: &str) -> Result<SweepSpec> {
    let families = families.iter().map(|f| f.bound_family()).collect::<Result<Vec<_>>>()?;
    let spec = SweepSpec {
        families,
        r_values: parse_values("r", r)?,
        n_values: parse_values("n", n)?,
        s_values: parse_values("s", s)?,
        q_values: parse_values("q", q)?,
        delta: delta.parse::<DeltaVariant>()?,
    };
    if spec.r_values.is_empty() || spec.n_values.is_empty() || spec.q_values.is_empty() {
        return Err(CliError::Invalid("ranges must be nonempty".into()));
    }
    if let Some(&bad) = spec.q_values.iter().find(|&&q| prime_power(q).is_none()) {
        return Err(CliError::Invalid(format!("{bad} is not a prime power")));
    }
    Ok(spec)
}

fn text_report(checks: &[BoundCheck]) -> String {
    let summary = summarize(checks);
    let mut out = String::new();
    for c in checks.iter().filter(|c| !c.pass) {
        let s = c.s.map(|s| format!(" s={s}")).unwrap_or_default();
        out.push_str(&format!(
            "FAIL {} r={} n={}{s} q={}: exact {} approx {} bound {} margin {}\n",
            c.family,
            c.r,
            c.n,
            c.q,
            c.exact,
            c.approx,
            c.bound,
            c.margin
        ));
    }
    out.push_str(&format!("{} checks, {} passed, {} failed\n", summary.total, summary.passed, summary.failed));
    for (family, n) in &summary.failed_by_family {
        out.push_str(&format!("  {family}: {n} failed\n"));
    }
    out
}

pub fn check_bounds(spec: &SweepSpec, format: Format, zero_bounds: bool) -> Result<(String, bool)> {
    let mut checks = sweep(spec)?;
    if zero_bounds {
        checks = checks.into_iter().map(|c| c.with_bound(BigRational::zero())).collect();
    }
    let all_pass = checks.iter().all(|c| c.pass);
    let text = match format {
        Format::Text => text_report(&checks),
        Format::Csv => to_csv(&checks),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&checks).map_err(|e| CliError::Internal(e.to_string()))?;
            s.push('\n');
            s
        }
    };
    Ok((text, all_pass))
}

pub fn oracle(family: FamilyArg, p: u64, k: u32, r: u32, n: usize, s: Option<usize>) -> Result<(String, bool)> {
    let field = FieldSpec::new(p, k)?;
    let got = match family {
        FamilyArg::R => sieve_reducible(&field, r, n)?,
        FamilyArg::I => sieve_irreducible(&field, r, n)?,
        FamilyArg::Q => {
            let s = s.ok_or_else(|| CliError::Invalid("family Q needs --s".into()))?;
            sieve_powerful(&field, r, n, s)?
        }
        FamilyArg::E => count_rel_irred_oracle(&field, r, n)?,
        other => return Err(CliError::Invalid(format!("no oracle for family {other}"))),
    };
    let want = eval(family, r, n, s, field.order() as i64)?;
    let matched = want == BigInt::from(got);
    let verdict = if matched { "=" } else { "!=" };
    let word = if matched { "MATCH" } else { "MISMATCH" };
    Ok((format!("{got} {verdict} {want} {word}"), matched))
}

pub fn partitions(n: usize, table: bool) -> Result<String> {
    if n == 0 {
        return Err(CliError::Invalid("need n >= 1".into()));
    }
    if table {
        Ok((1..=n).map(|m| format!("{m}: {}\n", partitions_listing(m))).collect())
    } else {
        Ok(format!("{}\n", partitions_listing(n)))
    }
}

pub fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}
