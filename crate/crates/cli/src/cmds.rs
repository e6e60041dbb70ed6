//! Subcommand implementations. Each builds a manifest, computes the output
//! body, and hands both to the shared sink (stdout or `--out`).

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Result};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use tropical_core::io::{self, format_num, scalar_token};
use tropical_core::semiring::ExtendedScalar;
use tropical_core::*;

use crate::manifest::Manifest;
use crate::{parse_semiring, Cli, Cmd, UsageError};

pub fn run(cli: Cli) -> Result<()> {
    let semiring = cli.semiring.as_deref();
    let (manifest, body) = match cli.command {
        Cmd::SemiringCheck { trials } => semiring_check(semiring, cli.seed, trials)?,
        Cmd::ShortestPath { ref graph, source } => paths(semiring, graph, source, true)?,
        Cmd::SolveBellman { ref graph, source } => paths(semiring, graph, source, false)?,
        Cmd::Legendre { ref grid, ref xi, xi_auto } => legendre(semiring, grid, xi.as_deref(), xi_auto)?,
        Cmd::Supconv { ref a, ref b } => supconv(semiring, a, b)?,
        Cmd::KernelApply { ref kernel, ref grid } => kernel_apply(semiring, kernel, grid)?,
        Cmd::Tropicalize { ref poly } => tropicalize_cmd(poly)?,
        Cmd::Newton { ref poly } => newton(poly)?,
        Cmd::Dequantize { ref poly, ref points, ref hs } => dequantize(poly, points, hs)?,
        Cmd::Polytope { ref op, ref a, ref b, ref dir } => polytope_cmd(op, a, b.as_deref(), dir.as_deref())?,
        Cmd::Hjb { m, t, dt, ref hs, ref init, ref potential, ref grid } => {
            hjb_cmd(semiring, m, t, dt, hs, init, potential, grid)?
        }
        Cmd::Boxdim { ref cloud, ref scales } => boxdim(cloud, scales)?,
        Cmd::Amoeba { ref poly, ref hs, samples, ref window, ref outdir } => {
            amoeba_cmd(poly, hs, samples, window, outdir, cli.quiet)?
        }
    };
    let mut text = String::new();
    if !cli.quiet {
        text.push_str(&manifest.render());
    }
    text.push_str(&body);
    match cli.out {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| anyhow!("cannot write {}: {e}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn resolve_spec(arg: Option<&str>, default: SemiringSpec) -> Result<SemiringSpec> {
    match arg {
        None => Ok(default),
        Some(s) => Ok(parse_semiring(s)?),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| anyhow!("cannot read {}: {e}", path.display()))
}

fn parse_f64_list(s: &str, what: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| UsageError(format!("bad {what} entry {t:?}")).into()))
        .collect()
}

// ---------------------------------------------------------------------
// semiring-check
// ---------------------------------------------------------------------

fn semiring_check(arg: Option<&str>, seed: Option<u64>, trials: usize) -> Result<(Manifest, String)> {
    let mut manifest = Manifest::new("semiring-check");
    manifest.param("trials", trials).seed(seed.or(Some(0)));
    let specs: Vec<SemiringSpec> = match arg {
        Some(s) => {
            manifest.param("semiring", s);
            vec![parse_semiring(s)?]
        }
        None => vec![
            SemiringSpec::MaxPlus,
            SemiringSpec::MinPlus,
            SemiringSpec::subtropical(1.0).unwrap(),
        ],
    };
    let mut r = StdRng::seed_from_u64(seed.unwrap_or(0));
    let mut body = String::new();
    let mut failed = false;
    for spec in specs {
        let exact = spec.is_idempotent();
        let mut worst: f64 = 0.0;
        let mut check = |name: &str, dev: f64, body: &mut String| {
            let tol = if exact { 0.0 } else { 1e-12 };
            let ok = dev <= tol;
            failed |= !ok;
            let _ = writeln!(
                body,
                "{spec} {name}: {} (max deviation {})",
                if ok { "ok" } else { "FAIL" },
                format_num(dev)
            );
        };
        let mut dev_assoc_add: f64 = 0.0;
        let mut dev_assoc_mul: f64 = 0.0;
        let mut dev_comm: f64 = 0.0;
        let mut dev_distr: f64 = 0.0;
        let mut dev_idem: f64 = 0.0;
        let mut dev_neutral: f64 = 0.0;
        for _ in 0..trials {
            let scalar = |r: &mut StdRng| -> ExtendedScalar {
                if r.gen_range(0..10) == 0 {
                    ExtendedScalar::Bottom
                } else {
                    ExtendedScalar::Finite(r.gen_range(-(1i64 << 15)..=(1i64 << 15)) as f64 / 1024.0)
                }
            };
            let (a, b, c) = (scalar(&mut r), scalar(&mut r), scalar(&mut r));
            let dist = |x: ExtendedScalar, y: ExtendedScalar| -> f64 {
                match (x, y) {
                    (ExtendedScalar::Finite(u), ExtendedScalar::Finite(v)) => {
                        (u - v).abs() / u.abs().max(v.abs()).max(1.0)
                    }
                    _ => {
                        if x == y {
                            0.0
                        } else {
                            f64::INFINITY
                        }
                    }
                }
            };
            dev_comm = dev_comm.max(dist(spec.add(a, b), spec.add(b, a)));
            dev_assoc_add = dev_assoc_add.max(dist(spec.add(spec.add(a, b), c), spec.add(a, spec.add(b, c))));
            dev_assoc_mul = dev_assoc_mul.max(dist(spec.mul(spec.mul(a, b), c), spec.mul(a, spec.mul(b, c))));
            dev_distr = dev_distr.max(dist(spec.mul(c, spec.add(a, b)), spec.add(spec.mul(c, a), spec.mul(c, b))));
            if exact {
                dev_idem = dev_idem.max(dist(spec.add(a, a), a));
            }
            dev_neutral = dev_neutral
                .max(dist(spec.add(a, spec.zero()), a))
                .max(dist(spec.mul(a, spec.one()), a))
                .max(dist(spec.mul(a, spec.zero()), spec.zero()));
        }
        check("add commutative", dev_comm, &mut body);
        check("add associative", dev_assoc_add, &mut body);
        check("mul associative", dev_assoc_mul, &mut body);
        check("distributivity", dev_distr, &mut body);
        if exact {
            check("add idempotent", dev_idem, &mut body);
        }
        check("neutral elements", dev_neutral, &mut body);
        worst = worst.max(dev_assoc_add).max(dev_distr);
        let _ = worst;
    }
    // Deformation gap bound across the h sweep.
    for h in [1.0, 0.1, 0.01] {
        let mut worst_excess: f64 = 0.0;
        let mut min_gap = f64::INFINITY;
        for _ in 0..trials {
            let u = r.gen_range(-32.0..32.0);
            let v = r.gen_range(-32.0..32.0);
            let gap = dequantized_add_limit_gap(u, v, h);
            worst_excess = worst_excess.max(gap - h * 2.0f64.ln());
            min_gap = min_gap.min(gap);
        }
        let ok = worst_excess <= 1e-15 * h && min_gap >= 0.0;
        failed |= !ok;
        let _ = writeln!(
            body,
            "deformation gap h={}: {} (excess {}, min {})",
            format_num(h),
            if ok { "ok" } else { "FAIL" },
            format_num(worst_excess.max(0.0)),
            format_num(min_gap)
        );
    }
    if failed {
        return Err(anyhow!("semiring law check failed:\n{body}"));
    }
    Ok((manifest, body))
}

// ---------------------------------------------------------------------
// shortest-path / solve-bellman
// ---------------------------------------------------------------------

fn paths(arg: Option<&str>, graph: &Path, source: usize, from_source: bool) -> Result<(Manifest, String)> {
    let spec = resolve_spec(arg, SemiringSpec::MinPlus)?;
    let mut manifest = Manifest::new(if from_source { "shortest-path" } else { "solve-bellman" });
    manifest.param("semiring", spec).param("source", source).input(graph)?;
    let g = io::parse_graph(&read(graph)?)?;
    let values: Vec<ExtendedScalar> = if from_source {
        shortest_paths(&g, source, spec)?
    } else {
        // Bellman value vector for F = unit column at `source`:
        // X[i] is the optimal weight of paths from i into the source node.
        if source >= g.node_count() {
            return Err(UsageError(format!("source {source} not in [0, {})", g.node_count())).into());
        }
        let h = g.adjacency_matrix(spec);
        let mut f = SemiringMatrix::zero(g.node_count(), 1, spec);
        f.set(source, 0, spec.one());
        let x = solve_bellman(&h, &f)?;
        (0..g.node_count()).map(|i| x.get(i, 0)).collect()
    };
    let mut body = String::new();
    for (i, v) in values.iter().enumerate() {
        let _ = writeln!(body, "{i} {}", scalar_token(*v, spec));
    }
    Ok((manifest, body))
}

// ---------------------------------------------------------------------
// legendre / supconv / kernel-apply
// ---------------------------------------------------------------------

fn legendre(arg: Option<&str>, grid: &Path, xi: Option<&str>, xi_auto: Option<usize>) -> Result<(Manifest, String)> {
    let spec = resolve_spec(arg, SemiringSpec::MaxPlus)?;
    let phi = io::parse_grid(&read(grid)?, spec)?;
    let xi_geom = match (xi, xi_auto) {
        (Some(desc), None) => {
            let parts = parse_f64_list(desc, "xi")?;
            if parts.len() != 3 || parts[2] < 1.0 || parts[2].fract() != 0.0 {
                return Err(UsageError(format!("--xi wants origin,step,len, got {desc:?}")).into());
            }
            GridGeom::line(parts[0], parts[1], parts[2] as usize)?
        }
        (None, Some(len)) => suggest_slope_grid(&phi, len)?,
        (None, None) => return Err(UsageError("legendre needs --xi or --xi-auto".into()).into()),
        _ => unreachable!("clap conflicts_with"),
    };
    let mut manifest = Manifest::new("legendre");
    manifest
        .param("semiring", spec)
        .param(
            "xi",
            format!(
                "{},{},{}",
                format_num(xi_geom.origin[0]),
                format_num(xi_geom.step[0]),
                xi_geom.extents[0]
            ),
        )
        .input(grid)?;
    let out = legendre_transform(&phi, &xi_geom)?;
    Ok((manifest, io::write_grid(&out)))
}

fn supconv(arg: Option<&str>, a: &Path, b: &Path) -> Result<(Manifest, String)> {
    let spec = resolve_spec(arg, SemiringSpec::MaxPlus)?;
    let mut manifest = Manifest::new("supconv");
    manifest.param("semiring", spec).input(a)?.input(b)?;
    let fa = io::parse_grid(&read(a)?, spec)?;
    let fb = io::parse_grid(&read(b)?, spec)?;
    let conv = sup_convolution(&fa, &fb)?;
    Ok((manifest, io::write_grid(&conv)))
}

fn kernel_apply(arg: Option<&str>, kernel: &Path, grid: &Path) -> Result<(Manifest, String)> {
    let spec = resolve_spec(arg, SemiringSpec::MaxPlus)?;
    let mut manifest = Manifest::new("kernel-apply");
    manifest.param("semiring", spec).input(kernel)?.input(grid)?;
    let k = Kernel::new(io::parse_grid(&read(kernel)?, spec)?)?;
    let phi = io::parse_grid(&read(grid)?, spec)?;
    let out = apply_kernel(&k, &phi)?;
    Ok((manifest, io::write_grid(&out)))
}

// ---------------------------------------------------------------------
// tropicalize / newton / dequantize
// ---------------------------------------------------------------------

fn tropicalize_cmd(poly: &Path) -> Result<(Manifest, String)> {
    let mut manifest = Manifest::new("tropicalize");
    manifest.input(poly)?;
    let f = io::parse_polynomial(&read(poly)?)?;
    let trop = f.tropicalize()?;
    let mut body = String::new();
    for (c, d) in trop.terms() {
        let slopes: Vec<String> = d.iter().map(|&x| format_num(x)).collect();
        let _ = writeln!(body, "{} {}", format_num(*c), slopes.join(" "));
    }
    Ok((manifest, body))
}

fn newton(poly: &Path) -> Result<(Manifest, String)> {
    let mut manifest = Manifest::new("newton");
    manifest.input(poly)?;
    let f = io::parse_polynomial(&read(poly)?)?;
    Ok((manifest, io::write_polytope(&f.newton_set()?)))
}

fn dequantize(poly: &Path, points: &[String], hs: &str) -> Result<(Manifest, String)> {
    let mut manifest = Manifest::new("dequantize");
    for (k, p) in points.iter().enumerate() {
        manifest.param(&format!("x{k}"), p);
    }
    manifest.param("h", hs).input(poly)?;
    let f = io::parse_polynomial(&read(poly)?)?;
    let hs = parse_f64_list(hs, "h")?;
    let mut body = String::new();
    for p in points {
        let x = parse_f64_list(p, "x")?;
        for &h in &hs {
            if !(h > 0.0) {
                return Err(UsageError(format!("h must be positive, got {h}")).into());
            }
            let v = f.dequantize_h(&x, h)?;
            let coords: Vec<String> = x.iter().map(|&c| format_num(c)).collect();
            let _ = writeln!(body, "{},{},{}", coords.join(","), format_num(h), format_num(v));
        }
    }
    Ok((manifest, body))
}

// ---------------------------------------------------------------------
// polytope
// ---------------------------------------------------------------------

fn polytope_cmd(op: &str, a: &Path, b: Option<&Path>, dir: Option<&str>) -> Result<(Manifest, String)> {
    let mut manifest = Manifest::new("polytope");
    manifest.param("op", op);
    let pa = io::parse_polytope(&read(a)?)?;
    let body = match op {
        "support" => {
            let dir = dir.ok_or_else(|| UsageError("polytope support needs --dir".into()))?;
            manifest.param("dir", dir).input(a)?;
            let x = parse_f64_list(dir, "dir")?;
            format!("{}\n", format_num(pa.support_function(&x)?))
        }
        _ => {
            let b = b.ok_or_else(|| UsageError(format!("polytope {op} needs two polytope files")))?;
            manifest.input(a)?.input(b)?;
            let pb = io::parse_polytope(&read(b)?)?;
            let out = match op {
                "sum" => pa.minkowski_sum(&pb)?,
                _ => pa.hull_union(&pb)?,
            };
            io::write_polytope(&out)
        }
    };
    Ok((manifest, body))
}

// ---------------------------------------------------------------------
// hjb
// ---------------------------------------------------------------------

#[allow(clippy::too_many_arguments)]
fn hjb_cmd(
    arg: Option<&str>,
    m: f64,
    t: f64,
    dt: f64,
    hs: &str,
    init: &str,
    potential: &str,
    grid: &str,
) -> Result<(Manifest, String)> {
    let spec = resolve_spec(arg, SemiringSpec::MinPlus)?;
    if spec != SemiringSpec::MinPlus {
        return Err(UsageError("hjb evolves over the min-plus semiring".into()).into());
    }
    let mut manifest = Manifest::new("hjb");
    manifest
        .param("m", format_num(m))
        .param("T", format_num(t))
        .param("dt", format_num(dt))
        .param("h", hs)
        .param("init", init)
        .param("potential", potential);
    let s0 = match init.strip_prefix("file:") {
        Some(path) => {
            let path = PathBuf::from(path);
            manifest.input(&path)?;
            io::parse_grid(&read(&path)?, SemiringSpec::MinPlus)?
        }
        None => {
            let parts = parse_f64_list(grid, "grid")?;
            if parts.len() != 3 || parts[2] < 2.0 || parts[2].fract() != 0.0 {
                return Err(UsageError(format!("--grid wants x0,x1,n, got {grid:?}")).into());
            }
            manifest.param("grid", grid);
            let n = parts[2] as usize;
            let geom = GridGeom::line(parts[0], (parts[1] - parts[0]) / (n - 1) as f64, n)?;
            match init {
                "quad" => GridFunction::from_values_fn(geom, SemiringSpec::MinPlus, |x| x[0] * x[0] / 2.0)?,
                "abs" => GridFunction::from_values_fn(geom, SemiringSpec::MinPlus, |x| x[0].abs())?,
                other => return Err(UsageError(format!("unknown init {other:?}")).into()),
            }
        }
    };
    let pot = match potential.strip_prefix("file:") {
        Some(path) => {
            let path = PathBuf::from(path);
            manifest.input(&path)?;
            io::parse_grid(&read(&path)?, SemiringSpec::MinPlus)?
        }
        None if potential == "zero" => {
            GridFunction::from_values_fn(s0.geom().clone(), SemiringSpec::MinPlus, |_| 0.0)?
        }
        None => return Err(UsageError(format!("unknown potential {potential:?}")).into()),
    };
    let prob = HJProblem::new(m, pot, s0)?;
    let hs = parse_f64_list(hs, "h")?;
    let report = dequantization_convergence(&prob, t, dt, &hs)?;
    let geom = report.hopf_lax_final.geom().clone();
    let mut body = String::new();
    let _ = writeln!(body, "# hopf-lax S(x,T)");
    for i in 0..geom.len() {
        let _ = writeln!(
            body,
            "{} {}",
            format_num(geom.coord1(i)),
            scalar_token(report.hopf_lax_final.value(i), SemiringSpec::MinPlus)
        );
    }
    for (h, s_h) in &report.viscous_finals {
        let _ = writeln!(body, "# viscous -h*log(u) at h={}", format_num(*h));
        for i in 0..geom.len() {
            let _ = writeln!(
                body,
                "{} {}",
                format_num(geom.coord1(i)),
                scalar_token(s_h.value(i), SemiringSpec::MinPlus)
            );
        }
    }
    let _ = writeln!(body, "# h gap");
    for &(h, gap) in &report.gaps {
        let _ = writeln!(body, "{} {}", format_num(h), format_num(gap));
    }
    Ok((manifest, body))
}

// ---------------------------------------------------------------------
// boxdim
// ---------------------------------------------------------------------

fn boxdim(cloud: &Path, scales: &str) -> Result<(Manifest, String)> {
    let mut manifest = Manifest::new("boxdim");
    manifest.param("scales", scales).input(cloud)?;
    let points = io::parse_point_cloud(&read(cloud)?)?;
    let scales = parse_f64_list(scales, "scales")?;
    let (estimate, sweep) = hb_dimension(&points, &scales)?;
    let mut body = String::from("# rho count log-ratio\n");
    for ((rho, count), ratio) in sweep.scales.iter().zip(&sweep.counts).zip(&sweep.log_ratios) {
        let _ = writeln!(body, "{} {} {}", format_num(*rho), count, format_num(*ratio));
    }
    let _ = writeln!(body, "estimate {}", format_num(estimate));
    Ok((manifest, body))
}

// ---------------------------------------------------------------------
// amoeba
// ---------------------------------------------------------------------

fn amoeba_cmd(
    poly: &Path,
    hs: &str,
    samples: usize,
    window: &str,
    outdir: &Path,
    quiet: bool,
) -> Result<(Manifest, String)> {
    let mut manifest = Manifest::new("amoeba");
    manifest.param("h", hs).param("samples", samples).param("window", window).input(poly)?;
    let w = parse_f64_list(window, "window")?;
    if w.len() != 4 {
        return Err(UsageError(format!("--window wants x0,x1,y0,y1, got {window:?}")).into());
    }
    let window = Window::new(w[0], w[1], w[2], w[3])?;
    let f = PlaneCurve::new(&io::parse_polynomial(&read(poly)?)?)?;
    let hs = parse_f64_list(hs, "h")?;
    std::fs::create_dir_all(outdir)
        .map_err(|e| anyhow!("cannot create {}: {e}", outdir.display()))?;

    let curve = tropical_curve(&f)?;
    let mut tropical_text = String::new();
    if !quiet {
        tropical_text.push_str(&manifest.render());
    }
    tropical_text.push_str("# tropical curve segments clipped to the window: x1 y1 x2 y2\n");
    for (p, q) in curve.clipped_segments(&window) {
        let _ = writeln!(
            tropical_text,
            "{} {} {} {}",
            format_num(p[0]),
            format_num(p[1]),
            format_num(q[0]),
            format_num(q[1])
        );
    }
    let tropical_path = outdir.join("tropical.csv");
    std::fs::write(&tropical_path, tropical_text)
        .map_err(|e| anyhow!("cannot write {}: {e}", tropical_path.display()))?;

    let mut body = String::from("# h hausdorff-distance points\n");
    for (k, &h) in hs.iter().enumerate() {
        if !(h > 0.0) {
            return Err(UsageError(format!("h must be positive, got {h}")).into());
        }
        let points = sample_amoeba(&f, h, samples, &window)?;
        let mut text = String::new();
        if !quiet {
            text.push_str(&manifest.render());
        }
        text.push_str(&format!("# amoeba samples at h={}\n", format_num(h)));
        text.push_str(&io::write_points(&points));
        let path = outdir.join(format!("amoeba_h{k}.csv"));
        std::fs::write(&path, text).map_err(|e| anyhow!("cannot write {}: {e}", path.display()))?;
        let distance = hausdorff_distance(&points, &curve, &window)?;
        let _ = writeln!(body, "{} {} {}", format_num(h), format_num(distance), points.len());
    }
    Ok((manifest, body))
}
