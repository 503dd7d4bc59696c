use std::f64::consts::PI;
use std::io::Write;

use clap::Args;
use num_complex::Complex64;

use negmass::dielectric::{epsilon, equivalence_route, find_epsilon_zeros, DrudeParams};
use negmass::dispersion::{scan, Units};
use negmass::grid::{FieldConfig, Grid1D, Profile};
use negmass::kleingordon::kg_mass_sign_invariance;
use negmass::pauli::{equivalence_report, transform, HamiltonianSpec, ParticleSpec, SignTransform};
use negmass::spinor::{clifford_identities, DiracRepresentation};

use crate::config::Settings;
use crate::format::{fmt_num, Cell, Format, Table};
use crate::{CliError, IoArgs};

const IO_KEYS: [&str; 2] = ["out", "format"];

/// Loads the config file, rejects unknown keys and resolves `--out`/`--format`.
fn settings(io: &IoArgs, keys: &[&str]) -> Result<(Settings, Output), CliError> {
    let cfg = Settings::load(io.config.as_deref())?;
    let allowed: Vec<&str> = keys.iter().chain(IO_KEYS.iter()).copied().collect();
    cfg.restrict(&allowed)?;
    let format = cfg.pick(io.format, "format", Format::Csv)?;
    let path = cfg.pick_opt(io.out.clone(), "out")?;
    Ok((cfg, Output { format, path }))
}

struct Output {
    format: Format,
    path: Option<std::path::PathBuf>,
}

impl Output {
    fn emit(&self, table: &Table) -> Result<(), CliError> {
        let text = table.render(self.format);
        match &self.path {
            Some(p) => std::fs::write(p, text)
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display()))),
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(text.as_bytes())
                    .and_then(|_| out.flush())
                    .map_err(|e| CliError::Usage(format!("cannot write to stdout: {e}")))
            }
        }
    }
}

#[derive(Debug, Args)]
pub struct CliffordArgs {
    /// Corrupt alpha1 before checking (negative control)
    #[arg(long)]
    pub inject_fault: bool,
    #[command(flatten)]
    pub io: IoArgs,
}

pub fn clifford_verify(args: CliffordArgs) -> Result<bool, CliError> {
    let (cfg, out) = settings(&args.io, &["inject-fault"])?;
    let inject = cfg.pick(args.inject_fault.then_some(true), "inject-fault", false)?;
    let mut rep = DiracRepresentation::standard();
    if inject {
        rep.alphas[0][(0, 3)] = Complex64::new(0.0, 1.0);
    }
    let checks = clifford_identities(&rep);
    let mut table = Table::new(vec!["identity", "result", "deviation"])
        .comment(format!("negmass clifford verify inject_fault={inject}"));
    for c in &checks {
        table.push(vec![
            Cell::text(&c.name),
            Cell::text(if c.passed { "PASS" } else { "FAIL" }),
            Cell::Num(c.deviation),
        ]);
    }
    out.emit(&table)?;
    Ok(checks.iter().all(|c| c.passed))
}

#[derive(Debug, Args)]
pub struct EquivalenceArgs {
    /// Grid points
    #[arg(long)]
    pub n: Option<usize>,
    /// Grid length (default 2π)
    #[arg(long)]
    pub l: Option<f64>,
    /// Scalar potential profile: zero | const:v | step:v | cos:v
    #[arg(long)]
    pub phi: Option<String>,
    /// Vector potential profile: zero | const:v | step:v | cos:v
    #[arg(long)]
    pub a: Option<String>,
    /// Uniform magnetic field along z
    #[arg(long)]
    pub bz: Option<f64>,
    /// Transform pair, e.g. `mass/+,charge/-`
    #[arg(long)]
    pub pair: Option<String>,
    /// Maximum eigenvalue gap accepted as equivalent
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub mass: Option<f64>,
    #[arg(long)]
    pub charge: Option<f64>,
    #[arg(long)]
    pub hbar: Option<f64>,
    #[command(flatten)]
    pub io: IoArgs,
}

fn parse_pair(s: &str) -> Result<(SignTransform, SignTransform), CliError> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| CliError::Usage(format!("transform pair `{s}` must be A,B")))?;
    Ok((a.parse()?, b.parse()?))
}

/// Expected verdict: members with the same potential sign are always
/// isospectral; otherwise only a vanishing φ, or a mean-zero cosine φ under
/// a vector potential that is invariant under the half-period shift combined
/// with conjugation, keeps the spectra equal.
fn expected_equivalent(pa: (SignTransform, SignTransform), phi: Profile, a: Profile) -> bool {
    let (_, sign_a) = pa.0.signs();
    let (_, sign_b) = pa.1.signs();
    if sign_a == sign_b || phi.is_zero() {
        return true;
    }
    matches!(phi, Profile::Cos(_)) && matches!(a, Profile::Zero | Profile::Const(_) | Profile::Cos(_))
}

pub fn equivalence(args: EquivalenceArgs) -> Result<bool, CliError> {
    let keys = ["n", "l", "phi", "a", "bz", "pair", "tol", "mass", "charge", "hbar"];
    let (cfg, out) = settings(&args.io, &keys)?;
    let n = cfg.pick(args.n, "n", 64)?;
    let l = cfg.pick(args.l, "l", 2.0 * PI)?;
    let phi: Profile = cfg.pick(args.phi, "phi", "zero".to_string())?.parse()?;
    let a: Profile = cfg.pick(args.a, "a", "zero".to_string())?.parse()?;
    let bz = cfg.pick(args.bz, "bz", 0.0)?;
    let pair_text = cfg.pick(args.pair, "pair", "mass/+,charge/-".to_string())?;
    let pair = parse_pair(&pair_text)?;
    let tol = cfg.pick(args.tol, "tol", 1e-10)?;
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(CliError::Usage(format!("tolerance must be >= 0, got {tol}")));
    }
    let particle = ParticleSpec::new(
        cfg.pick(args.mass, "mass", 1.0)?,
        cfg.pick(args.charge, "charge", 1.0)?,
        cfg.pick(args.hbar, "hbar", 1.0)?,
    )?;
    if !bz.is_finite() {
        return Err(CliError::Usage("bz must be finite".into()));
    }

    let grid = Grid1D::new(l, n)?;
    let fields = FieldConfig::from_profiles(&grid, a, phi, [0.0, 0.0, bz]);
    let base = HamiltonianSpec::base(grid, fields, particle)?;
    let report = equivalence_report(&transform(&base, pair.0), &transform(&base, pair.1), tol)?;
    let expected = expected_equivalent(pair, phi, a);

    let mut table = Table::new(vec!["profile", "max_gap", "trace_gap", "equivalent", "expected"]).comment(format!(
        "negmass equivalence n={n} l={} a={a} phi={phi} bz={} pair={} tol={} mass={} charge={} hbar={}",
        fmt_num(l),
        fmt_num(bz),
        pair_text,
        fmt_num(tol),
        fmt_num(particle.mass()),
        fmt_num(particle.charge()),
        fmt_num(particle.hbar()),
    ));
    table.push(vec![
        Cell::text(phi.to_string()),
        Cell::Num(report.max_eigenvalue_gap),
        Cell::Num(report.trace_gap),
        Cell::Bool(report.equivalent),
        Cell::Bool(expected),
    ]);
    out.emit(&table)?;
    Ok(report.equivalent == expected)
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub delta_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub delta_max: Option<f64>,
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long)]
    pub m0: Option<f64>,
    #[arg(long)]
    pub c: Option<f64>,
    #[arg(long)]
    pub hbar: Option<f64>,
    #[command(flatten)]
    pub io: IoArgs,
}

pub fn dispersion_scan(args: ScanArgs) -> Result<bool, CliError> {
    let keys = ["delta-min", "delta-max", "steps", "m0", "c", "hbar"];
    let (cfg, out) = settings(&args.io, &keys)?;
    let delta_min = cfg.pick(args.delta_min, "delta-min", 0.0)?;
    let delta_max = cfg.pick(args.delta_max, "delta-max", 2.0)?;
    let steps = cfg.pick(args.steps, "steps", 21)?;
    let units = Units::new(
        cfg.pick(args.m0, "m0", 1.0)?,
        cfg.pick(args.c, "c", 1.0)?,
        cfg.pick(args.hbar, "hbar", 1.0)?,
    )?;
    let points = scan(delta_min, delta_max, steps, &units)?;

    let mut table = Table::new(vec!["delta", "re_omega", "im_omega", "re_vg", "im_vg", "regime", "curvature_sign"])
        .comment(format!(
            "negmass dispersion scan delta_min={} delta_max={} steps={steps} m0={} c={} hbar={}",
            fmt_num(delta_min),
            fmt_num(delta_max),
            fmt_num(units.m0()),
            fmt_num(units.c()),
            fmt_num(units.hbar()),
        ));
    for p in &points {
        let (re_vg, im_vg) = match p.group_velocity {
            Some(v) => (Cell::Num(v.re), Cell::Num(v.im)),
            None => (Cell::Empty, Cell::Empty),
        };
        let curvature = match p.curvature_sign {
            Some(s) if s > 0 => Cell::text("+1"),
            Some(s) => Cell::text(s.to_string()),
            None => Cell::text("n/a"),
        };
        table.push(vec![
            Cell::Num(p.delta()),
            Cell::Num(p.omega.re),
            Cell::Num(p.omega.im),
            re_vg,
            im_vg,
            Cell::text(p.regime.name()),
            curvature,
        ]);
    }
    out.emit(&table)?;
    Ok(true)
}

#[derive(Debug, Args)]
pub struct DielectricArgs {
    /// Plasma frequency
    #[arg(long)]
    pub omega_p: Option<f64>,
    /// Damping rate (zero search needs 0)
    #[arg(long)]
    pub gamma: Option<f64>,
    /// Lower end of the zero search interval
    #[arg(long)]
    pub lo: Option<f64>,
    /// Upper end of the zero search interval
    #[arg(long)]
    pub hi: Option<f64>,
    /// Probe frequency for the equivalence route
    #[arg(long)]
    pub omega: Option<f64>,
    /// Scalar potential profile for route (a)
    #[arg(long)]
    pub phi: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub l: Option<f64>,
    /// Tolerance for "null" in both routes
    #[arg(long)]
    pub tol: Option<f64>,
    #[command(flatten)]
    pub io: IoArgs,
}

pub fn dielectric(args: DielectricArgs, route_only: bool) -> Result<bool, CliError> {
    let keys = ["omega-p", "gamma", "lo", "hi", "omega", "phi", "n", "l", "tol"];
    let (cfg, out) = settings(&args.io, &keys)?;
    let params = DrudeParams::new(cfg.pick(args.omega_p, "omega-p", 1.0)?, cfg.pick(args.gamma, "gamma", 0.0)?)?;
    let omega = cfg.pick_opt(args.omega, "omega")?;
    if route_only && omega.is_none() {
        return Err(CliError::Usage("dielectric route requires --omega".into()));
    }
    let mut table = Table::new(vec!["quantity", "value"]);
    let mut meta = format!(
        "negmass dielectric {} omega_p={} gamma={}",
        if route_only { "route" } else { "zeros" },
        fmt_num(params.omega_p()),
        fmt_num(params.gamma())
    );

    if !route_only {
        let lo = cfg.pick(args.lo, "lo", 0.5)?;
        let hi = cfg.pick(args.hi, "hi", 2.0)?;
        meta.push_str(&format!(" lo={} hi={}", fmt_num(lo), fmt_num(hi)));
        let zeros = find_epsilon_zeros(&params, lo, hi)?;
        table.push(vec![Cell::text("zero_count"), Cell::Int(zeros.len() as i64)]);
        for z in zeros {
            table.push(vec![Cell::text("zero"), Cell::Num(z)]);
        }
    }

    if let Some(w) = omega {
        let phi: Profile = cfg.pick(args.phi, "phi", "zero".to_string())?.parse()?;
        let n = cfg.pick(args.n, "n", 64)?;
        let l = cfg.pick(args.l, "l", 2.0 * PI)?;
        let tol = cfg.pick(args.tol, "tol", 1e-12)?;
        let grid = Grid1D::new(l, n)?;
        let fields = FieldConfig::from_profiles(&grid, Profile::Zero, phi, [0.0; 3]);
        let eps = epsilon(w, &params)?;
        let route = equivalence_route(&fields, &params, w, tol)?;
        meta.push_str(&format!(" omega={} phi={phi} n={n} l={} tol={}", fmt_num(w), fmt_num(l), fmt_num(tol)));
        table.push(vec![Cell::text("epsilon_re"), Cell::Num(eps.re)]);
        table.push(vec![Cell::text("epsilon_im"), Cell::Num(eps.im)]);
        table.push(vec![Cell::text("route_a_phi_null"), Cell::Bool(route.phi_null)]);
        table.push(vec![Cell::text("route_b_epsilon_null"), Cell::Bool(route.epsilon_null)]);
        table.push(vec![Cell::text("licensed"), Cell::Bool(route.licensed())]);
    }
    table = table.comment(meta);
    out.emit(&table)?;
    Ok(true)
}

#[derive(Debug, Args)]
pub struct KgArgs {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub l: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub mass: Option<f64>,
    #[arg(long)]
    pub c: Option<f64>,
    #[arg(long)]
    pub hbar: Option<f64>,
    #[command(flatten)]
    pub io: IoArgs,
}

pub fn kg_check(args: KgArgs) -> Result<bool, CliError> {
    let (cfg, out) = settings(&args.io, &["n", "l", "mass", "c", "hbar"])?;
    let n = cfg.pick(args.n, "n", 64)?;
    let l = cfg.pick(args.l, "l", 2.0 * PI)?;
    let mass = cfg.pick(args.mass, "mass", 1.0)?;
    let c = cfg.pick(args.c, "c", 1.0)?;
    let hbar = cfg.pick(args.hbar, "hbar", 1.0)?;
    let grid = Grid1D::new(l, n)?;
    let invariant = kg_mass_sign_invariance(grid, mass, c, hbar)?;
    let mut table = Table::new(vec!["n", "l", "mass", "invariant", "result"]).comment(format!(
        "negmass kg check n={n} l={} mass={} c={} hbar={}",
        fmt_num(l),
        fmt_num(mass),
        fmt_num(c),
        fmt_num(hbar)
    ));
    table.push(vec![
        Cell::Int(n as i64),
        Cell::Num(l),
        Cell::Num(mass),
        Cell::Bool(invariant),
        Cell::text(if invariant { "PASS" } else { "FAIL" }),
    ]);
    out.emit(&table)?;
    Ok(invariant)
}
