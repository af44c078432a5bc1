use std::io::{Read, Write};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cofsieve::crystal::{cof_e, cof_f, crystal_graph};
use cofsieve::csp::{macdonald_csp_suite, orbits, refined_csp_suite, sigma_csp_suite, CspReport, Permutation, Verdict};
use cofsieve::fillings::{enumerate_cof, macdonald_e};
use cofsieve::hall_littlewood::kostka_foulkes;
use cofsieve::llt::{llt_poly, mininv, VStripTuple};
use cofsieve::rsk_charge::{charge_word, postfix_charge, rsk, rsk_inverse, rsk_steps, schur_expansion_via_charge, BurgeWord};
use cofsieve::tableau::Tableau;
use cofsieve::{Basis, Error, Filling, Partition, SkewShape};

use super::{Cli, Command, CspSuite, Format, GraphFormat, EXIT_DOMAIN, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};

type Outcome = Result<u8, Error>;

/// Run a parsed command, writing results to `out`; returns the exit status.
pub fn run(cli: Cli, out: &mut dyn Write) -> u8 {
    if let Some(jobs) = cli.jobs {
        // A second initialization only happens in tests; the first pool stays in effect.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global();
    }
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse(_) | Error::InvalidBurgeWord(_) | Error::NotAPermutation(_) => EXIT_USAGE,
                _ => EXIT_DOMAIN,
            }
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Parse(format!("i/o: {e}"))
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::E { shape, m, basis, format } => cmd_e(&shape, m, basis, format, out),
        Command::Csp { suite } => cmd_csp(suite, out),
        Command::Orbits { shape, n, m, content, json } => {
            let m = content.as_ref().map_or(m.unwrap_or(0), |c| c.len());
            let all = orbits(&shape.scale(n), n, m, content.as_ref())?;
            if json {
                let v: Vec<Vec<String>> = all.iter().map(|o| o.iter().map(Filling::to_string).collect()).collect();
                writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")).map_err(io)?;
            } else {
                for (k, orbit) in all.iter().enumerate() {
                    let chain: Vec<String> = orbit.iter().map(Filling::to_string).collect();
                    writeln!(out, "orbit {} (size {}): {}", k + 1, orbit.len(), chain.join(" -> ")).map_err(io)?;
                }
                let total: usize = all.iter().map(Vec::len).sum();
                writeln!(out, "{} orbits, {} fillings", all.len(), total).map_err(io)?;
            }
            Ok(EXIT_PASS)
        }
        Command::Crystal { shape, m, format } => {
            let g = crystal_graph(&shape, m)?;
            match format {
                GraphFormat::Dot => write!(out, "{}", g.to_dot()),
                GraphFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&g.to_json()).expect("json")),
            }
            .map_err(io)?;
            Ok(EXIT_PASS)
        }
        Command::Rsk { input, filling, steps } => cmd_rsk(input, filling, steps, out),
        Command::Unrsk { p, q } => {
            let p: Tableau = p.parse()?;
            let q = Tableau::from_rows_unchecked(q.parse::<Tableau>()?.rows().to_vec(), true)?;
            writeln!(out, "{}", rsk_inverse(&p, &q)?).map_err(io)?;
            Ok(EXIT_PASS)
        }
        Command::Kostka { lambda, mu } => {
            writeln!(out, "{}", kostka_foulkes(&lambda, &mu)?).map_err(io)?;
            Ok(EXIT_PASS)
        }
        Command::Charge { word, postfix } => {
            let letters: Vec<u32> = word
                .chars()
                .filter(|c| !matches!(c, ' ' | ','))
                .map(|c| c.to_digit(10).ok_or_else(|| Error::Parse(format!("bad letter {c:?}"))))
                .collect::<Result<_, _>>()?;
            let c = match postfix {
                Some(mu) => postfix_charge(&mu, &letters)?,
                None => charge_word(&letters)?,
            };
            writeln!(out, "{c}").map_err(io)?;
            Ok(EXIT_PASS)
        }
        Command::Llt { tuple, m, mininv: only_min, basis } => {
            let t: VStripTuple = tuple.parse()?;
            let low = mininv(&t);
            if !only_min {
                writeln!(out, "{}", llt_poly(&t, m).in_basis(basis)).map_err(io)?;
            }
            writeln!(out, "mininv = {low}").map_err(io)?;
            Ok(EXIT_PASS)
        }
        Command::Selfcheck { seed, samples } => selfcheck(seed, samples, out),
    }
}

fn cmd_e(shape: &SkewShape, m: usize, basis: Basis, format: Format, out: &mut dyn Write) -> Outcome {
    if m < shape.max_column_height() {
        return Err(Error::NotEnoughVariables { needed: shape.max_column_height(), got: m });
    }
    let e = macdonald_e(shape, m).in_basis(basis);
    match format {
        Format::Text => writeln!(out, "{e}"),
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&e.to_json()).expect("json")),
    }
    .map_err(io)?;
    Ok(EXIT_PASS)
}

fn cmd_csp(suite: CspSuite, out: &mut dyn Write) -> Outcome {
    let (report, json): (CspReport, bool) = match suite {
        CspSuite::Main { lambda, n, m, json } => (macdonald_csp_suite(&lambda.into(), n, m)?, json),
        CspSuite::Refined { lambda, n, content, json } => (refined_csp_suite(&lambda.into(), n, &content)?, json),
        CspSuite::Skew { shape, n, m, json } => (macdonald_csp_suite(&shape, n, m)?, json),
        CspSuite::Sigma { shape, m, sigma, json } => (sigma_csp_suite(&shape, &Permutation::from_cycles(&sigma, m)?)?, json),
    };
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report.to_json()).expect("json")).map_err(io)?;
    } else {
        writeln!(out, "{report}").map_err(io)?;
    }
    Ok(match report.verdict {
        Verdict::Pass | Verdict::NotApplicable => EXIT_PASS,
        Verdict::Fail => EXIT_FAIL,
    })
}

fn cmd_rsk(input: Option<String>, filling: Option<String>, steps: bool, out: &mut dyn Write) -> Outcome {
    let word = match filling {
        Some(f) => BurgeWord::from_filling(&f.parse::<Filling>()?),
        None => {
            let mut text = String::new();
            match input.as_deref() {
                None | Some("-") => std::io::stdin().read_to_string(&mut text).map_err(io)?,
                Some(path) => std::fs::File::open(path).and_then(|mut f| f.read_to_string(&mut text)).map_err(io)?,
            };
            text.parse()?
        }
    };
    writeln!(out, "{word}").map_err(io)?;
    if steps {
        for (k, (p, q)) in rsk_steps(&word).iter().enumerate() {
            writeln!(out, "step {}: P = {p}  Q = {q}", k + 1).map_err(io)?;
        }
    }
    let (p, q) = rsk(&word);
    writeln!(out, "P = {p}\nQ = {q}").map_err(io)?;
    Ok(EXIT_PASS)
}

/// Random small skew shapes and fillings: maj against postfix charge, RSK round trips,
/// raising and lowering operators undoing each other, and both routes to the Schur expansion.
fn selfcheck(seed: u64, samples: usize, out: &mut dyn Write) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for k in 0..samples {
        let size = rng.gen_range(1..=6);
        let outer = Partition::all(size).choose(&mut rng).expect("partitions exist").clone();
        let inner = outer.subpartitions().choose(&mut rng).expect("empty inner").clone();
        if inner == outer {
            continue;
        }
        let shape = SkewShape::new(outer, inner)?;
        let m = rng.gen_range(shape.max_column_height().max(1)..=4.max(shape.max_column_height()));
        let all: Vec<Filling> = enumerate_cof(&shape, m).collect();
        let Some(f) = all.choose(&mut rng) else { continue };
        let word = BurgeWord::from_filling(f);
        let (p, q) = rsk(&word);
        let mut problems = Vec::new();
        if postfix_charge(&shape.inner().conjugate(), word.bottom())? != f.maj() {
            problems.push("maj differs from postfix charge");
        }
        if rsk_inverse(&p, &q)? != word {
            problems.push("RSK does not round-trip");
        }
        let i = rng.gen_range(1..m.max(2) as u32);
        if let Some(g) = cof_e(i, f)? {
            if cof_f(i, &g)?.as_ref() != Some(f) {
                problems.push("lowering does not undo raising");
            }
        }
        if macdonald_e(&shape, shape.size()).to_schur() != schur_expansion_via_charge(&shape) {
            problems.push("Schur expansions differ");
        }
        let status = if problems.is_empty() { "ok".to_string() } else { problems.join("; ") };
        failures += usize::from(!problems.is_empty());
        writeln!(out, "sample {}: shape {shape} m={m} filling {f}: {status}", k + 1).map_err(io)?;
    }
    writeln!(out, "{} failures", failures).map_err(io)?;
    Ok(if failures == 0 { EXIT_PASS } else { EXIT_FAIL })
}
