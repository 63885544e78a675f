use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::{Path as FsPath, PathBuf};

use gravphase_core::eigen::harmonic_wavefunction;
use gravphase_core::fringe::fit_fringe;
use gravphase_core::{
    bouncer_spectrum, classical_flow, endpoints, exit_probability_exact, exit_probability_weak,
    gravitational_coulomb_spectrum, harmonic_wigner_eigenstate, marginal_momentum, marginal_position,
    propagate_path, run_interferometer, transport, wigner_transform, Axis, ExitReport, GaussianState, GridSpec,
    InitialState, Path, PhysParams, PolynomialPotential, PulseSequence, RealField, Source, SplitStepConfig,
    WaveFunction,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::RunConfig;
use crate::error::CliError;

/// Everything a command needs besides the config file itself.
pub struct Ctx {
    pub cfg: RunConfig,
    pub command: &'static str,
    pub out: Option<PathBuf>,
    pub check_oracle: bool,
    pub seed: Option<u64>,
}

impl Ctx {
    fn provenance(&self) -> Vec<(String, String)> {
        let mut p = vec![("command".to_string(), self.command.to_string())];
        if let Some(s) = self.seed {
            p.push(("seed".into(), s.to_string()));
        }
        if self.check_oracle {
            p.push(("check".into(), "oracle".into()));
        }
        p.extend(self.cfg.provenance());
        p
    }

    fn header(&self) -> String {
        self.provenance().iter().map(|(k, v)| format!("# cfg {k} = {v}\n")).collect()
    }

    fn emit(&self, body: &[u8]) -> Result<(), CliError> {
        match &self.out {
            Some(p) => std::fs::write(p, body)?,
            None => {
                use std::io::Write;
                let mut so = std::io::stdout().lock();
                so.write_all(body)?;
                so.flush()?;
            }
        }
        Ok(())
    }

    fn params(&self) -> Result<PhysParams, CliError> {
        let c = &self.cfg;
        Ok(PhysParams::new(
            c.get("m_i")?,
            c.get("m_g")?,
            c.get("g")?,
            c.get("gamma")?,
            c.get("hbar")?,
            c.get("k")?,
        )?)
    }

    fn sequence(&self) -> Result<PulseSequence, CliError> {
        let c = &self.cfg;
        let seq = PulseSequence::new(c.get("T")?, c.get("k")?)?;
        Ok(match c.get_opt::<f64>("delta_phi")? {
            Some(d) => seq.with_laser_phase(d),
            None => seq.with_phases(c.get("phi0")?, c.get("phi_T")?, c.get("phi_2T")?),
        })
    }

    fn grid(&self) -> Result<GridSpec, CliError> {
        let c = &self.cfg;
        Ok(GridSpec::new(
            c.get("z_min")?,
            c.get("z_max")?,
            c.get("n_z")?,
            c.get("p_min")?,
            c.get("p_max")?,
            c.get("n_p")?,
        )?)
    }

    fn psi_axis(&self) -> Result<Axis, CliError> {
        let c = &self.cfg;
        Ok(Axis::new(c.get("psi_min")?, c.get("psi_max")?, c.get("psi_n")?)?)
    }

    fn state_kind(&self) -> Result<StateKind, CliError> {
        match self.cfg.get::<String>("state")?.as_str() {
            "gaussian" => Ok(StateKind::Gaussian),
            "harmonic" => Ok(StateKind::Harmonic),
            other => Err(CliError::Config(format!("key `state`: expected gaussian or harmonic, got `{other}`"))),
        }
    }

    fn gaussian(&self) -> Result<GaussianState, CliError> {
        let c = &self.cfg;
        Ok(GaussianState::new(c.get("z0")?, c.get("p0")?, c.get("sigma")?, c.get("hbar")?)?)
    }

    /// The initial state sampled on `axis`.
    fn wavefunction(&self, axis: Axis) -> Result<WaveFunction, CliError> {
        let psi = match self.state_kind()? {
            StateKind::Gaussian => self.gaussian()?.sample(axis)?,
            StateKind::Harmonic => {
                harmonic_wavefunction(self.cfg.get("level")?, self.cfg.get("omega")?, &self.params()?, axis)?
            }
        };
        Ok(psi.normalize()?)
    }

    fn initial_state(&self) -> Result<InitialState, CliError> {
        Ok(match self.state_kind()? {
            StateKind::Gaussian => InitialState::Gaussian(self.gaussian()?),
            StateKind::Harmonic => InitialState::Wave(self.wavefunction(self.psi_axis()?)?),
        })
    }

    fn threads(&self) -> Result<usize, CliError> {
        let n: usize = self.cfg.get("threads")?;
        Ok(if n > 0 { n } else { std::thread::available_parallelism().map_or(1, |n| n.get()) })
    }

    /// Laser phases for a sweep: a regular grid over [0, 2π), or sorted uniform
    /// draws when a seed is given.
    fn sweep_phases(&self) -> Result<Vec<f64>, CliError> {
        let n: usize = self.cfg.get("sweep_points")?;
        if n < 3 {
            return Err(CliError::Config(format!("key `sweep_points`: need at least 3, got {n}")));
        }
        Ok(match self.seed {
            None => (0..n).map(|i| 2.0 * PI * i as f64 / n as f64).collect(),
            Some(s) => {
                let mut rng = ChaCha8Rng::seed_from_u64(s);
                let mut v: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..2.0 * PI)).collect();
                v.sort_by(f64::total_cmp);
                v
            }
        })
    }

    fn exit_report(&self, seq: &PulseSequence, psi0: &InitialState) -> Result<ExitReport, CliError> {
        let params = self.params()?;
        match self.cfg.get::<String>("method")?.as_str() {
            "exact" => Ok(exit_probability_exact(seq, &params, psi0)?),
            "weak" => {
                let r = exit_probability_weak(seq, &params, psi0)?;
                if r.weak_gradient_terms.outside_weak_regime() {
                    eprintln!(
                        "warning: Γ′T² = {:.3} is outside the weak-gradient regime",
                        r.weak_gradient_terms.gamma_t2
                    );
                }
                Ok(r)
            }
            other => Err(CliError::Config(format!("key `method`: expected exact or weak, got `{other}`"))),
        }
    }

    fn oracle_setup(&self) -> Result<(WaveFunction, SplitStepConfig), CliError> {
        let hw: f64 = self.cfg.get("oracle_half_width")?;
        let n: usize = self.cfg.get("oracle_n")?;
        let axis = Axis::new(-hw, hw, n)?;
        Ok((self.wavefunction(axis)?, SplitStepConfig::new(self.cfg.get("oracle_steps")?)?))
    }

    fn oracle_p_g1(&self, seq: &PulseSequence, psi: &WaveFunction, sc: &SplitStepConfig) -> Result<f64, CliError> {
        let params = self.params()?;
        let v = PolynomialPotential::gravity(&params);
        Ok(run_interferometer(seq, &params, &v, psi, sc)?.p_g1)
    }
}

enum StateKind {
    Gaussian,
    Harmonic,
}

/// Runs `f` over `0..n` on `threads` workers; results come back in index order.
fn fan_out<T: Send>(
    n: usize,
    threads: usize,
    f: impl Fn(usize) -> Result<T, CliError> + Sync,
) -> Result<Vec<T>, CliError> {
    let chunk = n.div_ceil(threads.max(1)).max(1);
    let f = &f;
    let parts: Vec<Vec<Result<T, CliError>>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..n)
            .step_by(chunk)
            .map(|lo| s.spawn(move || (lo..(lo + chunk).min(n)).map(f).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().map(|h| h.join().expect("sweep worker panicked")).collect()
    });
    parts.into_iter().flatten().collect()
}

fn marginals_path(out: &FsPath) -> PathBuf {
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    out.with_file_name(format!("{stem}.marginals.csv"))
}

fn field_bytes(w: &RealField, prov: &[(String, String)]) -> Result<Vec<u8>, CliError> {
    let mut buf = Vec::new();
    w.write_csv(&mut buf, prov)?;
    Ok(buf)
}

pub fn transform(ctx: &Ctx) -> Result<(), CliError> {
    let grid = ctx.grid()?;
    let w = match ctx.state_kind()? {
        StateKind::Gaussian => wigner_transform(&ctx.wavefunction(ctx.psi_axis()?)?, &grid)?,
        StateKind::Harmonic => {
            harmonic_wigner_eigenstate(ctx.cfg.get("level")?, ctx.cfg.get("omega")?, &ctx.params()?, &grid)?
        }
    };
    let prov = ctx.provenance();
    ctx.emit(&field_bytes(&w, &prov)?)?;

    if let Some(out) = &ctx.out {
        let mut s = ctx.header();
        s.push_str("axis,x,density\n");
        for (x, d) in grid.z.points().zip(marginal_position(&w)) {
            writeln!(s, "z,{x:.16e},{d:.16e}").unwrap();
        }
        for (x, d) in grid.p.points().zip(marginal_momentum(&w)) {
            writeln!(s, "p,{x:.16e},{d:.16e}").unwrap();
        }
        std::fs::write(marginals_path(out), s)?;
    }
    Ok(())
}

pub fn propagate(ctx: &Ctx) -> Result<(), CliError> {
    let grid = ctx.grid()?;
    let params = ctx.params()?;
    let seq = ctx.sequence()?;
    let gauss;
    let table;
    let source = match ctx.state_kind()? {
        StateKind::Gaussian => {
            gauss = ctx.gaussian()?;
            Source::Gaussian(&gauss)
        }
        StateKind::Harmonic => {
            table = harmonic_wigner_eigenstate(ctx.cfg.get("level")?, ctx.cfg.get("omega")?, &params, &grid)?;
            Source::Tabulated(&table)
        }
    };
    let path = match ctx.cfg.get::<String>("path")?.as_str() {
        "upper" => Some(Path::Upper),
        "lower" => Some(Path::Lower),
        "interference" => Some(Path::Interference),
        "classical" => None,
        other => {
            return Err(CliError::Config(format!(
                "key `path`: expected upper, lower, interference or classical, got `{other}`"
            )))
        }
    };
    let prov = ctx.provenance();
    let mut buf = Vec::new();
    match path {
        Some(path) => propagate_path(source, path, &seq, &params, &grid)?.write_csv(&mut buf, &prov)?,
        None => {
            let t = ctx.cfg.get_opt::<f64>("flow_time")?.unwrap_or(2.0 * seq.t);
            transport(source, &classical_flow(&params, t)?, &grid)?.write_csv(&mut buf, &prov)?
        }
    }
    ctx.emit(&buf)
}

pub fn ifm(ctx: &Ctx) -> Result<(), CliError> {
    let seq = ctx.sequence()?;
    let report = ctx.exit_report(&seq, &ctx.initial_state()?)?;
    let mut s = ctx.header();
    s.push_str(&report.to_key_values());
    if ctx.check_oracle {
        let (psi, sc) = ctx.oracle_setup()?;
        let p = ctx.oracle_p_g1(&seq, &psi, &sc)?;
        writeln!(s, "oracle_P_g1 = {p:.16e}").unwrap();
        writeln!(s, "oracle_discrepancy = {:.16e}", (p - report.p_g1).abs()).unwrap();
    }
    if let Some(path) = ctx.cfg.get_opt::<PathBuf>("endpoints_csv")? {
        let e = endpoints(&seq, &ctx.params()?, ctx.cfg.get("z0")?, ctx.cfg.get("p0")?)?;
        let mut csv = ctx.header();
        csv.push_str("z_u,p_u,z_l,p_l,z_i,p_i,delta_z,delta_p,delta_s,delta_c\n");
        let row = [e.z_u, e.p_u, e.z_l, e.p_l, e.z_i, e.p_i, e.delta_z, e.delta_p, e.delta_s, e.delta_c];
        csv.push_str(&row.iter().map(|v| format!("{v:.16e}")).collect::<Vec<_>>().join(","));
        csv.push('\n');
        std::fs::write(path, csv)?;
    }
    ctx.emit(s.as_bytes())
}

pub fn ifm_sweep(ctx: &Ctx) -> Result<(), CliError> {
    let base = ctx.sequence()?;
    let psi0 = ctx.initial_state()?;
    let phases = ctx.sweep_phases()?;
    let oracle = if ctx.check_oracle { Some(ctx.oracle_setup()?) } else { None };
    let rows = fan_out(phases.len(), ctx.threads()?, |i| {
        let seq = base.with_laser_phase(phases[i]);
        let r = ctx.exit_report(&seq, &psi0)?;
        let o = match &oracle {
            Some((psi, sc)) => Some(ctx.oracle_p_g1(&seq, psi, sc)?),
            None => None,
        };
        Ok((r, o))
    })?;
    let p: Vec<f64> = rows.iter().map(|(r, _)| r.p_g1).collect();
    let fit = fit_fringe(&phases, &p)?;

    let mut s = ctx.header();
    writeln!(
        s,
        "# fit offset = {:.16e}, contrast = {:.16e}, phase = {:.16e}, max_residual = {:.3e}",
        fit.offset, fit.contrast, fit.phase, fit.max_residual
    )
    .unwrap();
    s.push_str("delta_phi,");
    s.push_str(&ExitReport::csv_header());
    if oracle.is_some() {
        s.push_str(",oracle_P_g1,discrepancy");
    }
    s.push('\n');
    for (dphi, (r, o)) in phases.iter().zip(&rows) {
        write!(s, "{dphi:.16e},{}", r.csv_row()).unwrap();
        if let Some(o) = o {
            write!(s, ",{o:.16e},{:.16e}", (o - r.p_g1).abs()).unwrap();
        }
        s.push('\n');
    }
    ctx.emit(s.as_bytes())
}

pub fn eigen(ctx: &Ctx) -> Result<(), CliError> {
    let c = &ctx.cfg;
    let mut params = ctx.params()?;
    params.m_g *= c.get::<f64>("m_g_scale")?;
    params.m_i *= c.get::<f64>("m_i_scale")?;
    let n_max: usize = c.get("n_max")?;
    let spec = match c.get::<String>("spectrum")?.as_str() {
        "bouncer" => bouncer_spectrum(&params, n_max)?,
        "coulomb" => gravitational_coulomb_spectrum(&params, c.get("source_mass")?, c.get("G")?, n_max)?,
        other => return Err(CliError::Config(format!("key `spectrum`: expected bouncer or coulomb, got `{other}`"))),
    };
    let mut s = ctx.header();
    s.push_str(&spec.to_csv());
    ctx.emit(s.as_bytes())
}

pub fn oracle_compare(ctx: &Ctx) -> Result<(), CliError> {
    let base = ctx.sequence()?;
    let psi0 = ctx.initial_state()?;
    let phases = ctx.sweep_phases()?;
    let (psi, sc) = ctx.oracle_setup()?;
    let rows = fan_out(phases.len(), ctx.threads()?, |i| {
        let seq = base.with_laser_phase(phases[i]);
        Ok((ctx.exit_report(&seq, &psi0)?.p_g1, ctx.oracle_p_g1(&seq, &psi, &sc)?))
    })?;
    let worst = rows.iter().map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);

    let mut s = ctx.header();
    writeln!(s, "# max_discrepancy = {worst:.16e}").unwrap();
    s.push_str("delta_phi,P_exact,P_oracle,discrepancy\n");
    for (dphi, (a, b)) in phases.iter().zip(&rows) {
        writeln!(s, "{dphi:.16e},{a:.16e},{b:.16e},{:.16e}", (a - b).abs()).unwrap();
    }
    ctx.emit(s.as_bytes())
}
