use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::Path;

use geoflow::parse_complex;
use geoflow::rootdata::{
    branch_k_to_m, casimir_shift, contragredient, m_coeffs, nu_of_sigma, nu_sigma, parse_m_weight, w0, weyl_dim,
    GroupDesc, Irrep,
};
use geoflow::specfun::{
    c_function, c_function_logderiv, c_jl, extract_q, omega_decomposed, omega_direct, p_j, p_j_closed, plancherel_poly,
};
use geoflow::spectrum::{self, import_complex_lengths, synthesize, validate, write_csv, write_jsonl, LengthSpectrum};
use geoflow::verify::{self, VerifyOptions};
use geoflow::zeta::{
    grid, log_antisymmetric, log_ruelle_sigma, log_ruelle_tau, log_selberg, log_selberg_product, log_symmetrized,
    log_xi_normalizer, ruelle_selberg_factorization, scan, singularity_ledger, ClassCharacter, SpectralModel,
    SplitCharacter, XiData, ZetaError, ZetaValue,
};
use num_complex::Complex64;

use crate::config::Config;
use crate::format::{complex, real};
use crate::{
    Cli, CliError, Command, EvalArgs, Kind, LedgerCommand, SigmaArgs, SpecfunCommand, SpectrumCommand, Suite,
    ZetaCommand,
};

pub const FAULT_ENV: &str = "GEOFLOW_VERIFY_INJECT_FAULT";

struct Ctx {
    cfg: Config,
}

impl Ctx {
    fn c(&self, z: Complex64) -> String {
        complex(z, self.cfg.digits)
    }

    fn r(&self, x: f64) -> String {
        real(x, self.cfg.digits)
    }

    fn sigma(&self, a: &SigmaArgs) -> Result<Irrep, CliError> {
        self.sigma_or(a, None)
    }

    /// Like [`Ctx::sigma`], with `fallback_n` (the spectrum's `n`) used last.
    fn sigma_or(&self, a: &SigmaArgs, fallback_n: Option<usize>) -> Result<Irrep, CliError> {
        let inferred = a.sigma.as_ref().map(|s| s.trim_matches(|c| c == '(' || c == ')').split(',').count());
        let n = a
            .n
            .or(self.cfg.n)
            .or(inferred)
            .or(fallback_n)
            .ok_or_else(|| CliError::Input("give --n or --sigma".into()))?;
        if n == 0 {
            return Err(CliError::Input("n must be at least 1".into()));
        }
        match &a.sigma {
            Some(s) => Ok(parse_m_weight(n, s)?),
            None => Ok(Irrep::trivial(GroupDesc::m(n))),
        }
    }
}

fn number(s: &str, what: &str) -> Result<Complex64, CliError> {
    parse_complex(s).ok_or_else(|| CliError::Input(format!("{what}: cannot parse {s:?} as a complex number")))
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    File::create(path).map(BufWriter::new).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_spectrum(path: &Path) -> Result<LengthSpectrum, CliError> {
    spectrum::parse(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn save_spectrum(spec: &LengthSpectrum, path: &Path) -> Result<(), CliError> {
    let out = create(path)?;
    if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
        write_csv(spec, out)?;
    } else {
        write_jsonl(spec, out)?;
    }
    Ok(())
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let mut cfg = Config::load(cli.config.as_deref())?;
    if let Some(d) = cli.digits {
        cfg.digits = d;
    }
    cfg.check()?;
    let ctx = Ctx { cfg };
    match cli.command {
        Command::Rep(a) => rep(&ctx, &a),
        Command::Specfun(c) => specfun(&ctx, c),
        Command::Spectrum(c) => spectrum_cmd(&ctx, c),
        Command::Zeta(c) => zeta(&ctx, c),
        Command::Ledger(c) => ledger(&ctx, c),
        Command::Verify { suite, n, seed } => verify_cmd(suite, n, seed),
    }
}

fn rep(ctx: &Ctx, a: &SigmaArgs) -> Result<(), CliError> {
    let sigma = ctx.sigma(a)?;
    let nu = nu_sigma(&sigma);
    println!("sigma={}", sigma.weight);
    println!("dim={}", weyl_dim(&sigma));
    println!("c={}", casimir_shift(&sigma));
    println!("w0={}", w0(&sigma).weight);
    println!("contragredient={}", contragredient(&sigma).weight);
    println!("nu_sigma={} dim={}", nu.weight, weyl_dim(&nu));
    match nu_of_sigma(&sigma) {
        Ok(v) => println!("nu(sigma)={}", v.weight),
        Err(_) => println!("nu(sigma)=undefined"),
    }
    println!("m: {}", m_coeffs(&sigma)?);
    let parts: Vec<String> = branch_k_to_m(&nu).iter().map(|p| p.weight.to_string()).collect();
    println!("branch(nu_sigma): {}", parts.join(" "));
    Ok(())
}

fn specfun(ctx: &Ctx, c: SpecfunCommand) -> Result<(), CliError> {
    match c {
        SpecfunCommand::Omega { sigma, lambda, check } => {
            let sigma = ctx.sigma(&sigma)?;
            let lam = number(&lambda, "lambda")?;
            let v = omega_direct(&sigma, lam)?;
            println!("omega={}", ctx.c(v));
            if check {
                let q = extract_q(&sigma)?;
                let d = omega_decomposed(&sigma, lam, &q)?;
                println!("decomposed={}", ctx.c(d));
                println!("residual={}", ctx.r((v - d).norm()));
            }
        }
        SpecfunCommand::Pj { sigma, j, lambda } => {
            let sigma = ctx.sigma(&sigma)?;
            let lam = number(&lambda, "lambda")?;
            let js: Vec<usize> = j.map_or_else(|| (2..=sigma.group.n + 1).collect(), |j| vec![j]);
            for j in js {
                let v = p_j(&sigma, j, lam)?;
                let closed = p_j_closed(&sigma, j, lam)?;
                println!("j={j} P={} closed={}", ctx.c(v), ctx.c(closed));
            }
        }
        SpecfunCommand::Cjl { sigma } => {
            let sigma = ctx.sigma(&sigma)?;
            println!("j,l,c");
            for c in c_jl(&sigma)? {
                println!("{},{},{}", c.j, c.l, c.value);
            }
        }
        SpecfunCommand::Cnu { sigma, nu, lambda } => {
            let sigma = ctx.sigma(&sigma)?;
            let nu = Irrep::new(GroupDesc::k(sigma.group.n), nu.parse()?)?;
            let lam = number(&lambda, "lambda")?;
            println!("c={}", ctx.c(c_function(&sigma, &nu, lam, ctx.cfg.alpha_n)?));
            println!("logderiv={}", ctx.c(c_function_logderiv(&sigma, &nu, lam)?));
        }
        SpecfunCommand::Plancherel { sigma, lambda } => {
            let sigma = ctx.sigma(&sigma)?;
            let p = plancherel_poly(&sigma, ctx.cfg.c_norm);
            let coeffs: Vec<String> = p.coeffs.iter().map(|&c| ctx.r(c)).collect();
            println!("coeffs_lambda2={}", coeffs.join(","));
            if let Some(l) = lambda {
                println!("value={}", ctx.c(p.eval(number(&l, "lambda")?)));
            }
        }
    }
    Ok(())
}

fn spectrum_cmd(ctx: &Ctx, c: SpectrumCommand) -> Result<(), CliError> {
    match c {
        SpectrumCommand::Gen { n, count, seed, mean_gap, output } => {
            let spec = synthesize(n, count, seed, mean_gap)?;
            save_spectrum(&spec, &output)?;
            eprintln!("wrote {} primes to {}", spec.entries.len(), output.display());
        }
        SpectrumCommand::Validate { file, growth_bound } => {
            let spec = load_spectrum(&file)?;
            let r = validate(&spec, growth_bound);
            println!("status={}", if r.ok() { "OK" } else { "INVALID" });
            println!("n={}", spec.n);
            println!("count={}", r.count);
            println!("total_multiplicity={}", r.total_multiplicity);
            println!("cutoff={}", ctx.r(spec.completeness_cutoff));
            println!("sorted={}", r.sorted);
            println!("growth_constant={}", ctx.r(r.growth_constant));
            if let Some(l) = r.growth_argmax {
                println!("growth_argmax={}", ctx.r(l));
            }
            if let Some(i) = r.first_unsorted {
                eprintln!("warning: lengths decrease at record {i}");
            }
            if let Some(w) = &r.growth_warning {
                eprintln!("warning: {w}");
            }
            if !r.ok() {
                return Err(CliError::Input(r.issues.join("; ")));
            }
        }
        SpectrumCommand::Convert { file, output } => {
            let spec = load_spectrum(&file)?;
            save_spectrum(&spec, &output)?;
        }
        SpectrumCommand::ImportComplex { file, cutoff, output } => {
            let cutoff = if cutoff == "inf" {
                f64::INFINITY
            } else {
                cutoff.parse().map_err(|_| CliError::Input(format!("bad cutoff {cutoff:?}")))?
            };
            let f = File::open(&file).map_err(|e| CliError::Input(format!("{}: {e}", file.display())))?;
            let spec = import_complex_lengths(BufReader::new(f), cutoff)?;
            save_spectrum(&spec, &output)?;
        }
    }
    Ok(())
}

/// Everything needed to evaluate one kind at many points.
struct Evaluator {
    kind: Kind,
    sigma: Irrep,
    spec: LengthSpectrum,
    tail_target: f64,
    class_char: ClassCharacter,
    split_char: Option<SplitCharacter>,
    xi: Option<XiData>,
    k_max: u32,
    cutoff: f64,
}

impl Evaluator {
    fn new(ctx: &Ctx, a: &EvalArgs) -> Result<Self, CliError> {
        let loaded = a.spectrum.as_deref().map(load_spectrum).transpose()?;
        let sigma = ctx.sigma_or(&a.sigma, loaded.as_ref().map(|s| s.n))?;
        let n = sigma.group.n;
        let spec = loaded.unwrap_or_else(|| LengthSpectrum::empty(n));
        if spec.n != n {
            return Err(CliError::Input(format!("spectrum has n = {}, sigma has n = {n}", spec.n)));
        }
        let tail_target = a.tail_target.unwrap_or(ctx.cfg.tail_target);
        if !(tail_target > 0.0) {
            return Err(CliError::Input("tail target must be positive".into()));
        }
        let split_char = match (a.kind, &a.tau) {
            (Kind::RuelleTau, Some(t)) => Some(SplitCharacter::from_irrep(&Irrep::new(GroupDesc::g(n), t.parse()?)?)),
            (Kind::RuelleTau, None) => return Err(CliError::Input("ruelle-tau needs --tau".into())),
            _ => None,
        };
        let xi = if a.kind == Kind::Xi {
            Some(XiData::new(
                &sigma,
                a.vol.unwrap_or(ctx.cfg.vol),
                a.p.unwrap_or(ctx.cfg.p),
                a.c_gamma.unwrap_or(ctx.cfg.c_gamma),
                a.c_norm.unwrap_or(ctx.cfg.c_norm),
            )?)
        } else {
            None
        };
        Ok(Evaluator {
            kind: a.kind,
            class_char: ClassCharacter::from_irrep(&sigma),
            sigma,
            spec,
            tail_target,
            split_char,
            xi,
            k_max: a.k_max,
            cutoff: a.cutoff.unwrap_or(f64::INFINITY),
        })
    }

    fn log_value(&self, s: Complex64) -> Result<ZetaValue, ZetaError> {
        let (spec, tt) = (&self.spec, self.tail_target);
        match self.kind {
            Kind::Selberg => log_selberg(s, &self.class_char, spec, tt),
            Kind::SelbergProduct => log_selberg_product(s, &self.class_char, spec, self.k_max, self.cutoff),
            Kind::Sym => log_symmetrized(s, &self.sigma, spec, tt),
            Kind::Antisym => log_antisymmetric(s, &self.sigma, spec, tt),
            Kind::RuelleSigma => log_ruelle_sigma(s, &self.class_char, spec, tt),
            Kind::RuelleTau => log_ruelle_tau(s, self.split_char.as_ref().expect("checked in new"), spec, tt),
            Kind::Xi => Ok(ZetaValue {
                value: log_xi_normalizer(s, self.xi.as_ref().expect("checked in new"))?,
                tail_bound: 0.0,
                cutoff_used: 0.0,
            }),
        }
    }

    fn value(&self, s: Complex64, log: bool) -> Result<ZetaValue, ZetaError> {
        let v = self.log_value(s)?;
        if log {
            return Ok(v);
        }
        let value = v.value.exp();
        Ok(ZetaValue { value, tail_bound: value.norm() * v.tail_bound.exp_m1(), cutoff_used: v.cutoff_used })
    }
}

fn parse_range(s: &str, what: &str) -> Result<(f64, f64, usize), CliError> {
    let bad = || CliError::Input(format!("{what}: expected start:end:steps, got {s:?}"));
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let a = parts[0].parse().map_err(|_| bad())?;
    let b = parts[1].parse().map_err(|_| bad())?;
    let k: usize = parts[2].parse().map_err(|_| bad())?;
    if k == 0 {
        return Err(bad());
    }
    Ok((a, b, k))
}

fn zeta(ctx: &Ctx, c: ZetaCommand) -> Result<(), CliError> {
    match c {
        ZetaCommand::Eval { args, s } => {
            let ev = Evaluator::new(ctx, &args)?;
            let s = number(&s, "s")?;
            let v = ev.value(s, args.log)?;
            println!("{}={}", if args.log { "log_value" } else { "value" }, ctx.c(v.value));
            println!("tail_bound={}", ctx.r(v.tail_bound));
            println!("cutoff_used={}", ctx.r(v.cutoff_used));
        }
        ZetaCommand::Scan { args, re, im, workers, output } => {
            let ev = Evaluator::new(ctx, &args)?;
            let (r0, r1, rk) = parse_range(&re, "--re")?;
            let (i0, i1, ik) = parse_range(&im, "--im")?;
            let points = grid((r0, r1), (i0, i1), rk, ik);
            let values = scan(&points, workers, |s| ev.value(s, args.log))?;
            let mut out: Box<dyn Write> = match &output {
                Some(p) => Box::new(create(p)?),
                None => Box::new(BufWriter::new(std::io::stdout().lock())),
            };
            let io = |e: std::io::Error| CliError::Input(format!("write: {e}"));
            writeln!(out, "re_s,im_s,re_val,im_val,tail_bound").map_err(io)?;
            for (s, v) in points.iter().zip(values) {
                let v = v?;
                writeln!(out, "{},{},{},{},{}", ctx.r(s.re), ctx.r(s.im), ctx.r(v.value.re), ctx.r(v.value.im), ctx.r(v.tail_bound))
                    .map_err(io)?;
            }
            out.flush().map_err(io)?;
        }
        ZetaCommand::FactorCheck { sigma, s, spectrum, tail_target, synthetic } => {
            let loaded = spectrum.as_deref().map(load_spectrum).transpose()?;
            let sigma = ctx.sigma_or(&sigma, loaded.as_ref().map(|s| s.n))?;
            let n = sigma.group.n;
            let spec = match loaded {
                Some(s) => s,
                None => {
                    let (count, seed) = synthetic
                        .split_once(':')
                        .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
                        .ok_or_else(|| CliError::Input(format!("--synthetic: expected count:seed, got {synthetic:?}")))?;
                    synthesize(n, count, seed, 0.1)?
                }
            };
            if spec.n != n {
                return Err(CliError::Input(format!("spectrum has n = {}, sigma has n = {n}", spec.n)));
            }
            let s = number(&s, "s")?;
            let f = ruelle_selberg_factorization(s, &sigma, &spec, tail_target.unwrap_or(ctx.cfg.tail_target))?;
            println!("lhs={}", ctx.c(f.lhs));
            println!("rhs={}", ctx.c(f.rhs));
            println!("discrepancy={}", ctx.r(f.discrepancy));
            println!("tail_bound={}", ctx.r(f.tail_bound));
            println!("cutoff_used={}", ctx.r(f.cutoff_used));
        }
    }
    Ok(())
}

fn ledger(ctx: &Ctx, c: LedgerCommand) -> Result<(), CliError> {
    let LedgerCommand::Predict { model, sigma, max_depth, csv } = c;
    let mut m = SpectralModel::from_json(&read(&model)?)?;
    if let Some(s) = sigma {
        m.sigma = parse_m_weight(m.sigma.group.n, &s)?;
    }
    let report = singularity_ledger(&m, max_depth)?;
    if csv {
        println!("re,im,order");
        for x in &report.singularities {
            println!("{},{},{}", ctx.r(x.location.re), ctx.r(x.location.im), x.order);
        }
        for note in &report.notes {
            eprintln!("note: {note}");
        }
    } else {
        println!("{:>20} {:>20} {:>6}", "re", "im", "order");
        for x in &report.singularities {
            println!("{:>20} {:>20} {:>6}", ctx.r(x.location.re), ctx.r(x.location.im), x.order);
        }
        for note in &report.notes {
            println!("# note: {note}");
        }
    }
    Ok(())
}

fn verify_cmd(suite: Suite, n: Option<usize>, seed: u64) -> Result<(), CliError> {
    let inject_fault = std::env::var(FAULT_ENV).is_ok_and(|v| v == "1");
    let opts = VerifyOptions { n, seed, inject_fault };
    let name = match suite {
        Suite::All => "all",
        Suite::Rep => "rep",
        Suite::Specfun => "specfun",
        Suite::Zeta => "zeta",
    };
    let results = verify::run(name, &opts).expect("known suite");
    let mut failed = 0;
    for r in &results {
        println!("{}", serde_json::to_string(r).map_err(|e| CliError::Input(e.to_string()))?);
        if !r.pass {
            failed += 1;
        }
    }
    if failed > 0 {
        return Err(CliError::Verify { failed, total: results.len() });
    }
    eprintln!("{} properties passed", results.len());
    Ok(())
}
