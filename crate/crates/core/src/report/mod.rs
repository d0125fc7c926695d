//! Table generation, published-value checks and output formats.

mod document;
mod published;

pub use document::{render_csv, render_json, render_markdown, sig7, Cell, Report, Row, Table};
pub use published::{CheckLine, EXPERIMENT_EXCITED, EXPERIMENT_GROUND};

use std::path::PathBuf;

use serde::Serialize;

use crate::anharmonic::{
    conventional_pt_diverges, energy_conventional_pt, energy_present_with, energy_variational, solve_omega, ClosedForm,
    PtOrder,
};
use crate::error::{Error, Result};
use crate::exact::{diag_eigenvalues, shoot_eigenvalue, ShootingConfig};
use crate::helium::{
    excited_triplet_energy, ground_state, optimal_zstar_excited, second_order_partial_sums, IntegralCache, LoadStatus,
    MRange, PairEnumeration, SumConfig,
};
use crate::model::{AnharmonicSpec, Constants};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    Table1,
    Table2,
    Table3,
    Helium,
    Sweep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Markdown,
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    /// `None` picks the command's default grid.
    pub b_values: Option<Vec<f64>>,
    /// Levels per b in `sweep`.
    pub n_levels: usize,
    pub n_max_helium: u32,
    pub m_range: MRange,
    pub pairs: PairEnumeration,
    pub exact_dim: usize,
    pub exact_tol: f64,
    pub output_format: Format,
    pub constants_path: Option<PathBuf>,
    pub cache_path: Option<PathBuf>,
    pub check: bool,
}

impl RunConfig {
    pub fn new(command: Command) -> RunConfig {
        RunConfig {
            command,
            b_values: None,
            n_levels: 3,
            n_max_helium: 7,
            m_range: MRange::Paper,
            pairs: PairEnumeration::Unique,
            exact_dim: crate::exact::DEFAULT_DIM,
            exact_tol: 1e-10,
            output_format: Format::Markdown,
            constants_path: None,
            cache_path: None,
            check: false,
        }
    }

    pub fn b_grid(&self) -> Vec<f64> {
        match (&self.b_values, self.command) {
            (Some(b), _) => b.clone(),
            (None, Command::Table2 | Command::Table3) => vec![0.05],
            (None, _) => vec![0.01, 0.05, 0.25],
        }
    }

    fn validate(&self) -> Result<()> {
        if self.b_grid().is_empty() {
            return Err(Error::domain("b_values", "need at least one value"));
        }
        if self.n_levels == 0 {
            return Err(Error::domain("n_levels", "must be >= 1"));
        }
        if self.n_max_helium < 2 {
            return Err(Error::domain("n_max", format!("must be >= 2, got {}", self.n_max_helium)));
        }
        let levels = match self.command {
            Command::Sweep => self.n_levels,
            _ => 2,
        };
        if self.exact_dim < levels + 20 {
            return Err(Error::domain(
                "exact_dim",
                format!("must be >= {} for {levels} levels, got {}", levels + 20, self.exact_dim),
            ));
        }
        Ok(())
    }
}

/// Everything a run produced.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub checks: Vec<CheckLine>,
    pub convergence_failures: usize,
    /// (hits, misses, how the file was opened) when a cache path was given.
    pub cache: Option<(u64, u64, LoadStatus)>,
}

impl Outcome {
    /// 0 success, 2 published-value mismatch, 3 solver non-convergence.
    pub fn exit_code(&self) -> i32 {
        if self.convergence_failures > 0 {
            3
        } else if self.checks.iter().any(|c| !c.pass) {
            2
        } else {
            0
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Markdown => render_markdown(&self.report),
            Format::Csv => render_csv(&self.report),
            Format::Json => render_json(&self.report),
        }
    }
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    let constants = match &cfg.constants_path {
        Some(p) => Constants::from_json_file(p)?,
        None => Constants::default(),
    };
    match cfg.command {
        Command::Helium => run_helium(cfg, &constants),
        _ => run_table(cfg, &constants),
    }
}

/// Every method at one (b, n).
struct Level {
    n: usize,
    hbar_omega_n: f64,
    stiffness_n: f64,
    pt1: f64,
    pt2: f64,
    diverges: bool,
    variational: f64,
    present: f64,
    present_printed: f64,
    shoot: std::result::Result<f64, String>,
    diag: std::result::Result<f64, String>,
}

/// Convergence failures become annotated cells; anything else aborts the run.
fn soften<T>(r: Result<T>, failures: &mut usize) -> Result<std::result::Result<T, String>> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(e @ Error::Convergence { .. }) => {
            log::error!("{e}");
            *failures += 1;
            Ok(Err(e.to_string()))
        }
        Err(e) => Err(e),
    }
}

fn levels_for_b(spec: &AnharmonicSpec, n_levels: usize, cfg: &RunConfig, failures: &mut usize) -> Result<Vec<Level>> {
    let shooting = ShootingConfig {
        energy_tol: cfg.exact_tol,
        ..ShootingConfig::default()
    };
    let basis_u = solve_omega(spec, 0).hbar_omega_n;
    let diag_all = soften(diag_eigenvalues(spec, cfg.exact_dim, basis_u, n_levels), failures)?;
    (0..n_levels)
        .map(|n| {
            let omega = solve_omega(spec, n);
            Ok(Level {
                n,
                hbar_omega_n: omega.hbar_omega_n,
                stiffness_n: omega.stiffness(spec),
                pt1: energy_conventional_pt(spec, n, PtOrder::First).e_total,
                pt2: energy_conventional_pt(spec, n, PtOrder::Second).e_total,
                diverges: conventional_pt_diverges(spec, n),
                variational: energy_variational(spec, n).e_total,
                present: energy_present_with(spec, n, ClosedForm::Corrected)?.e_total,
                present_printed: energy_present_with(spec, n, ClosedForm::AsPrinted)?.e_total,
                shoot: soften(shoot_eigenvalue(spec, n, &shooting), failures)?,
                diag: diag_all.as_ref().map(|v| v[n]).map_err(Clone::clone),
            })
        })
        .collect()
}

fn exact_cell(r: &std::result::Result<f64, String>) -> Cell {
    match r {
        Ok(v) => Cell::value(*v),
        Err(reason) => Cell::Failed { reason: reason.clone() },
    }
}

fn b_label(b: f64) -> String {
    format!("b = {b}")
}

const DIVERGES: &str = "diverges";

fn pt2_cell(l: &Level, exact: Option<f64>) -> Cell {
    Cell::relative(l.pt2, exact).flagged(l.diverges.then_some(DIVERGES))
}

/// Rows of one level across a b grid.
fn level_table(title: &str, n: usize, grid: &[(f64, Vec<Level>)], with_printed: bool) -> Table {
    let mut t = Table::new(title, grid.iter().map(|(b, _)| b_label(*b)).collect());
    let at = |f: &dyn Fn(&Level) -> Cell| grid.iter().map(|(_, ls)| f(&ls[n])).collect::<Vec<_>>();
    let exact = |l: &Level| l.shoot.as_ref().ok().copied();
    t.push(Row::new("conventional PT, 2nd order", at(&|l| pt2_cell(l, exact(l)))));
    t.push(Row::new("variational", at(&|l| Cell::relative(l.variational, exact(l)))));
    t.push(Row::new("present", at(&|l| Cell::relative(l.present, exact(l)))));
    if with_printed {
        t.push(Row::new(
            "present, as-printed closed form",
            at(&|l| Cell::relative(l.present_printed, exact(l))),
        ));
    }
    t.push(Row::new("exact, shooting", at(&|l| exact_cell(&l.shoot))));
    t.push(Row::new("exact, diagonalization", at(&|l| exact_cell(&l.diag))));
    t.push(Row::new(
        format!("½mΩ{n}² (eV Å⁻²)"),
        at(&|l| Cell::value(l.stiffness_n)),
    ));
    t
}

fn orders_table(b: f64, l: &Level) -> Table {
    let exact = l.shoot.as_ref().ok().copied();
    let mut t = Table::new(
        format!("ground state by order, {}", b_label(b)),
        vec!["first order".into(), "second order".into()],
    );
    t.push(Row::new(
        "conventional PT",
        vec![Cell::relative(l.pt1, exact), pt2_cell(l, exact)],
    ));
    t.push(Row::new("variational", vec![Cell::relative(l.variational, exact), Cell::Empty]));
    t.push(Row::new(
        "present",
        vec![Cell::relative(l.variational, exact), Cell::relative(l.present, exact)],
    ));
    t.push(Row::new("exact, shooting", vec![exact_cell(&l.shoot), Cell::Empty]));
    t
}

fn sweep_table(b: f64, levels: &[Level]) -> Table {
    let mut t = Table::new(
        format!("levels, {}", b_label(b)),
        [
            "ħΩn (eV)",
            "½mΩn² (eV Å⁻²)",
            "PT 1st",
            "PT 2nd",
            "variational",
            "present",
            "exact, shooting",
            "exact, diagonalization",
        ]
        .map(String::from)
        .to_vec(),
    );
    for l in levels {
        let exact = l.shoot.as_ref().ok().copied();
        t.push(Row::new(
            format!("n = {}", l.n),
            vec![
                Cell::value(l.hbar_omega_n),
                Cell::value(l.stiffness_n),
                Cell::relative(l.pt1, exact),
                pt2_cell(l, exact),
                Cell::relative(l.variational, exact),
                Cell::relative(l.present, exact),
                exact_cell(&l.shoot),
                exact_cell(&l.diag),
            ],
        ));
    }
    t
}

pub fn run_table(cfg: &RunConfig, constants: &Constants) -> Result<Outcome> {
    let mut failures = 0;
    let n_levels = match cfg.command {
        Command::Sweep => cfg.n_levels,
        Command::Table3 => 2,
        _ => 1,
    };
    let grid = cfg
        .b_grid()
        .into_iter()
        .map(|b| {
            let spec = AnharmonicSpec::new(0.5, b, *constants)?;
            Ok((b, levels_for_b(&spec, n_levels, cfg, &mut failures)?))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut notes = vec![format!(
        "k = 0.5 eV Å⁻², κ = {} eV Å²; percentages are relative to the shooting eigenvalue",
        constants.kappa
    )];
    let (title, tables) = match cfg.command {
        Command::Table1 => ("ground state", vec![level_table("ground state energy (eV)", 0, &grid, false)]),
        Command::Table2 => (
            "ground state, first and second order",
            grid.iter().map(|(b, ls)| orders_table(*b, &ls[0])).collect(),
        ),
        Command::Table3 => {
            notes.push("as-printed closed form: −28n instead of −280n in the quintic".into());
            (
                "first excited state",
                vec![level_table("first excited state energy (eV)", 1, &grid, true)],
            )
        }
        Command::Sweep => ("level sweep", grid.iter().map(|(b, ls)| sweep_table(*b, ls)).collect()),
        Command::Helium => unreachable!("dispatched separately"),
    };
    if grid.iter().flat_map(|(_, ls)| ls).any(|l| l.diverges) {
        notes.push(format!(
            "{DIVERGES}: the bare-basis 2nd-order term exceeds the 1st-order quartic shift"
        ));
    }

    let mut report = Report {
        title: title.to_string(),
        tables,
        notes,
    };
    let checks = if cfg.check {
        published::check_report(cfg.command, &report)
    } else {
        Vec::new()
    };
    if cfg.check {
        report.tables.push(published::check_table(&checks));
    }
    Ok(Outcome {
        report,
        checks,
        convergence_failures: failures,
        cache: None,
    })
}

pub fn run_helium(cfg: &RunConfig, constants: &Constants) -> Result<Outcome> {
    let z = 2.0;
    let (cache, status) = match &cfg.cache_path {
        Some(p) => {
            let (c, s) = IntegralCache::load(p);
            (Some(c), Some(s))
        }
        None => (None, None),
    };
    let sum = SumConfig {
        n_max: cfg.n_max_helium,
        m_range: cfg.m_range,
        pairs: cfg.pairs,
    };
    let ground = ground_state(z, &sum, cache.as_ref())?;

    let describe = |s: &SumConfig| {
        let m = match s.m_range {
            MRange::Paper => "0 ≤ m ≤ l",
            MRange::Full => "−l ≤ m ≤ l",
        };
        let p = match s.pairs {
            PairEnumeration::Unique => "n ≤ n′",
            PairEnumeration::Ordered => "ordered (n, n′)",
        };
        format!("{m}, {p}")
    };

    let mut g = Table::new(
        format!("ground state (ryd), Z = 2, {}, n′ ≤ {}", describe(&sum), sum.n_max),
        vec!["value".into()],
    );
    let exp = Some(EXPERIMENT_GROUND);
    g.push(Row::new("Z*", vec![Cell::value(ground.z_star)]));
    g.push(Row::new("variational", vec![Cell::relative(ground.e_variational, exp)]));
    g.push(Row::new("second order", vec![Cell::value(ground.e_second)]));
    g.push(Row::new("total", vec![Cell::relative(ground.e_total, exp)]));
    g.push(Row::new("total (eV)", vec![Cell::value(ground.e_total * constants.rydberg)]));
    g.push(Row::new("1s screening length a₀/Z* (Å)", vec![Cell::value(constants.bohr_radius / ground.z_star)]));
    g.push(Row::new("experiment", vec![Cell::value(EXPERIMENT_GROUND)]));

    let variants = [
        SumConfig { m_range: MRange::Paper, pairs: PairEnumeration::Unique, ..sum },
        SumConfig { m_range: MRange::Full, pairs: PairEnumeration::Unique, ..sum },
        SumConfig { m_range: MRange::Paper, pairs: PairEnumeration::Ordered, ..sum },
    ];
    let partials = variants
        .iter()
        .map(|v| second_order_partial_sums(ground.z_star, z, v, cache.as_ref()))
        .collect::<Result<Vec<_>>>()?;
    let mut p = Table::new(
        "second-order partial sums (ryd)",
        variants.iter().map(describe).collect(),
    );
    for (i, (n_max, _)) in partials[0].iter().enumerate() {
        p.push(Row::new(
            format!("n′ ≤ {n_max}"),
            partials.iter().map(|ps| Cell::value(ps[i].1)).collect(),
        ));
    }

    let zx = optimal_zstar_excited(z, cache.as_ref())?;
    let ex = excited_triplet_energy(zx, z, cache.as_ref())?;
    let mut e = Table::new("first excited state, spin triplet 1s2s (ryd)", vec!["value".into()]);
    e.push(Row::new("Z*", vec![Cell::value(zx)]));
    e.push(Row::new("variational", vec![Cell::relative(ex, Some(EXPERIMENT_EXCITED))]));
    e.push(Row::new("experiment", vec![Cell::value(EXPERIMENT_EXCITED)]));

    let notes = vec![
        "percentages are relative to experiment".to_string(),
        "−l ≤ m ≤ l and ordered-pair columns are investigative; ordered pairs count every n ≠ n′ state twice".to_string(),
    ];
    let mut report = Report {
        title: "helium".into(),
        tables: vec![g, p, e],
        notes,
    };
    let checks = if cfg.check {
        published::check_report(Command::Helium, &report)
    } else {
        Vec::new()
    };
    if cfg.check {
        report.tables.push(published::check_table(&checks));
    }

    let cache_info = match (cache, status, &cfg.cache_path) {
        (Some(c), Some(s), Some(path)) => {
            c.save(path)?;
            Some((c.hits(), c.misses(), s))
        }
        _ => None,
    };
    Ok(Outcome {
        report,
        checks,
        convergence_failures: 0,
        cache: cache_info,
    })
}
