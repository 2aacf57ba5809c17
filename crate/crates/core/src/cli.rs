//! Command-line front end.
//!
//! One binary, subcommand style. Output is deterministic: members are
//! always sorted by (size, lexicographic), and repeated runs on the same
//! input produce byte-identical output. Exit codes: 0 success, 1
//! usage/parse error, 2 complete enumeration requested on an infinite
//! set, 3 violated precondition (reported on stderr with an `error:`
//! prefix).

use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::enumeration::{
    aa_conjecture, aa_decode, aa_encode, aa_members, average_size, count_aa, count_ss, count_t0,
    parse_params, rational_catalan, rational_to_string, ss_conjecture, ss_members, st_cores,
    st_decode, st_encode, t0_conjecture, t0_members, CyclicWord,
};
use crate::error::{Error, Result};
use crate::finiteness::{
    decide_finite, enumerate_members, BoundUsed, Certificate, EnumMode, EnumerationResult,
};
use crate::multicore::{is_core, mp_content, weight, Datum, DatumSet, Multipartition};
use crate::partitions::Partition;
use crate::weyl::orbit_members;

#[derive(Parser)]
#[command(
    name = "coremp",
    version,
    about = "Exact tests, enumeration and counts for simultaneous core multipartitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountFamily {
    Ss,
    T0,
    Aa,
    Anderson,
}

impl CountFamily {
    fn as_str(self) -> &'static str {
        match self {
            CountFamily::Ss => "ss",
            CountFamily::T0 => "t0",
            CountFamily::Aa => "aa",
            CountFamily::Anderson => "anderson",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CodecFamily {
    St,
    Aa,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Encode,
    Decode,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Scale {
    Small,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Core membership and weight of a multipartition under one datum
    Check {
        #[arg(long)]
        datum: String,
        #[arg(long)]
        mp: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Residue content of a multipartition under one datum
    Content {
        #[arg(long)]
        datum: String,
        #[arg(long)]
        mp: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Finiteness verdict for an intersection of core sets
    Finite {
        #[arg(long)]
        data: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Members of an intersection of core sets
    Enumerate {
        #[arg(long)]
        data: String,
        #[arg(long)]
        complete: bool,
        #[arg(long, default_value_t = 12)]
        max_size: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Core multipartitions generated as the orbit of the empty one
    Orbit {
        #[arg(long)]
        datum: String,
        #[arg(long, default_value_t = 12)]
        max_size: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Closed-form counts (ss: s,t,a,b / t0: s,a,b / aa: s,t,a /
    /// anderson: s,t)
    Count {
        #[arg(long, value_enum)]
        family: CountFamily,
        #[arg(long)]
        params: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Enumerated average size against the conjectured value
    Avg {
        #[arg(long, value_enum)]
        family: CountFamily,
        #[arg(long)]
        params: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Count (and optionally list) the (s,t)-cores for coprime s, t
    Stcores {
        s: u64,
        t: u64,
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Boundary-word codecs (families st and aa)
    Codec {
        #[arg(value_enum)]
        direction: Direction,
        #[arg(long, value_enum)]
        family: CodecFamily,
        #[arg(long)]
        params: String,
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        partition: Option<String>,
        #[arg(long)]
        mp: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the built-in oracle suites
    Verify {
        #[arg(long, value_enum, default_value = "small")]
        scale: Scale,
    },
}

/// Entry point used by the binary: parses `std::env::args`.
pub fn run_from_env() -> u8 {
    let args: Vec<String> = std::env::args().collect();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(&args, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI against explicit argument and stream handles.
pub fn run<W: Write, E: Write>(args: &[String], out: &mut W, err: &mut E) -> u8 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = writeln!(err, "error: {e}");
                    1
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Parse(_) => 1,
                Error::InfiniteSet => 2,
                _ => 3,
            }
        }
    }
}

fn dispatch<W: Write>(command: Command, out: &mut W) -> Result<u8> {
    match command {
        Command::Check { datum, mp, format } => cmd_check(&datum, &mp, format, out),
        Command::Content { datum, mp, format } => cmd_content(&datum, &mp, format, out),
        Command::Finite { data, format } => cmd_finite(&data, format, out),
        Command::Enumerate {
            data,
            complete,
            max_size,
            format,
        } => cmd_enumerate(&data, complete, max_size, format, out),
        Command::Orbit {
            datum,
            max_size,
            format,
        } => cmd_orbit(&datum, max_size, format, out),
        Command::Count {
            family,
            params,
            format,
        } => cmd_count(family, &params, format, out),
        Command::Avg {
            family,
            params,
            format,
        } => cmd_avg(family, &params, format, out),
        Command::Stcores { s, t, list, format } => cmd_stcores(s, t, list, format, out),
        Command::Codec {
            direction,
            family,
            params,
            word,
            partition,
            mp,
            format,
        } => cmd_codec(direction, family, &params, word, partition, mp, format, out),
        Command::Verify { scale } => cmd_verify(scale, out),
    }
}

fn write_json<W: Write>(out: &mut W, value: &Value) -> Result<u8> {
    writeln!(out, "{value}").ok();
    Ok(0)
}

fn cmd_check<W: Write>(datum: &str, mp: &str, format: Format, out: &mut W) -> Result<u8> {
    let d: Datum = datum.parse()?;
    let m: Multipartition = mp.parse()?;
    let core = is_core(&m, &d)?;
    let w = weight(&m, &d)?;
    match format {
        Format::Text => {
            writeln!(out, "core={core} weight={w}").ok();
        }
        Format::Json => {
            return write_json(out, &json!({"core": core, "weight": w}));
        }
        Format::Csv => {
            writeln!(out, "core,weight").ok();
            writeln!(out, "{core},{w}").ok();
        }
    }
    Ok(0)
}

fn cmd_content<W: Write>(datum: &str, mp: &str, format: Format, out: &mut W) -> Result<u8> {
    let d: Datum = datum.parse()?;
    let m: Multipartition = mp.parse()?;
    let content = mp_content(&m, &d)?;
    let entries: Vec<(i64, u64)> = content.iter().map(|(c, &n)| (c.value(), n)).collect();
    match format {
        Format::Text => {
            writeln!(out, "modulus={} total={}", d.modulus(), content.total()).ok();
            for (r, n) in entries {
                writeln!(out, "{r}:{n}").ok();
            }
        }
        Format::Json => {
            let list: Vec<Value> = entries
                .iter()
                .map(|(r, n)| json!({"residue": r, "count": n}))
                .collect();
            return write_json(
                out,
                &json!({"modulus": d.modulus(), "total": content.total(), "entries": list}),
            );
        }
        Format::Csv => {
            writeln!(out, "residue,count").ok();
            for (r, n) in entries {
                writeln!(out, "{r},{n}").ok();
            }
        }
    }
    Ok(0)
}

fn cmd_finite<W: Write>(data: &str, format: Format, out: &mut W) -> Result<u8> {
    let ts: DatumSet = data.parse()?;
    let v = decide_finite(&ts);
    match format {
        Format::Text => {
            let x = v.condition_x.map_or("n/a".to_string(), |b| b.to_string());
            writeln!(
                out,
                "finite={} g={} conditionX={} reason={}",
                v.finite,
                v.g_value,
                x,
                v.reason.as_str()
            )
            .ok();
        }
        Format::Json => {
            return write_json(
                out,
                &json!({
                    "finite": v.finite,
                    "g": v.g_value,
                    "conditionX": v.condition_x,
                    "reason": v.reason.as_str(),
                }),
            );
        }
        Format::Csv => {
            writeln!(out, "finite,g,conditionX,reason").ok();
            let x = v.condition_x.map_or(String::new(), |b| b.to_string());
            writeln!(out, "{},{},{},{}", v.finite, v.g_value, x, v.reason.as_str()).ok();
        }
    }
    Ok(0)
}

fn describe_bound(bound: &BoundUsed) -> Value {
    match bound {
        BoundUsed::SizeCeiling(n) => json!({"type": "size-ceiling", "value": n}),
        BoundUsed::ComponentBoxes(boxes) => {
            let list: Vec<Value> = boxes
                .iter()
                .map(|b| json!({"row": b.max_first_row, "column": b.max_first_column}))
                .collect();
            json!({"type": "component-boxes", "boxes": list})
        }
    }
}

fn write_members<W: Write>(result: &EnumerationResult, format: Format, out: &mut W) -> Result<u8> {
    let (certificate, saturated) = match result.certificate {
        Certificate::Certified => ("certified", None),
        Certificate::SaturationHeuristic { saturated } => ("saturation-heuristic", Some(saturated)),
    };
    match format {
        Format::Text => {
            for m in &result.members {
                writeln!(out, "{m}").ok();
            }
            let bound = match &result.bound_used {
                BoundUsed::SizeCeiling(n) => format!("size-ceiling={n}"),
                BoundUsed::ComponentBoxes(_) => "component-boxes".to_string(),
            };
            let extra = saturated.map_or(String::new(), |s| format!(" saturated={s}"));
            writeln!(
                out,
                "count={} certificate={certificate}{extra} {bound}",
                result.members.len()
            )
            .ok();
        }
        Format::Json => {
            let members: Vec<String> = result.members.iter().map(|m| m.to_string()).collect();
            return write_json(
                out,
                &json!({
                    "members": members,
                    "count": members.len(),
                    "certificate": certificate,
                    "saturated": saturated,
                    "bound": describe_bound(&result.bound_used),
                }),
            );
        }
        Format::Csv => {
            writeln!(out, "member,size").ok();
            for m in &result.members {
                writeln!(out, "{m},{}", m.size()).ok();
            }
        }
    }
    Ok(0)
}

fn cmd_enumerate<W: Write>(
    data: &str,
    complete: bool,
    max_size: u64,
    format: Format,
    out: &mut W,
) -> Result<u8> {
    let ts: DatumSet = data.parse()?;
    let mode = if complete {
        EnumMode::Complete
    } else {
        EnumMode::Bounded
    };
    let result = enumerate_members(&ts, max_size, mode)?;
    write_members(&result, format, out)
}

fn cmd_orbit<W: Write>(datum: &str, max_size: u64, format: Format, out: &mut W) -> Result<u8> {
    let d: Datum = datum.parse()?;
    // modulus 1 has no generator action; the orbit convention is the
    // empty multipartition alone
    let members = if d.modulus() == 1 {
        vec![Multipartition::empty(d.level())]
    } else {
        orbit_members(&d, max_size)?
    };
    match format {
        Format::Text => {
            for m in &members {
                writeln!(out, "{m}").ok();
            }
            writeln!(out, "count={}", members.len()).ok();
        }
        Format::Json => {
            let list: Vec<String> = members.iter().map(|m| m.to_string()).collect();
            return write_json(out, &json!({"members": list, "count": list.len()}));
        }
        Format::Csv => {
            writeln!(out, "member,size").ok();
            for m in &members {
                writeln!(out, "{m},{}", m.size()).ok();
            }
        }
    }
    Ok(0)
}

fn take_params(params: &str, expected: usize, usage: &str) -> Result<Vec<u64>> {
    let values = parse_params(params)?;
    if values.len() != expected {
        return Err(Error::Parse(format!(
            "expected {expected} parameters ({usage}), got {}",
            values.len()
        )));
    }
    Ok(values)
}

fn count_value(family: CountFamily, params: &str) -> Result<(Vec<u64>, num_bigint::BigUint)> {
    match family {
        CountFamily::Ss => {
            let p = take_params(params, 4, "s,t,a,b")?;
            let n = count_ss(p[0], p[1], p[2], p[3])?;
            Ok((p, n))
        }
        CountFamily::T0 => {
            let p = take_params(params, 3, "s,a,b")?;
            let n = count_t0(p[0], p[1], p[2])?;
            Ok((p, n))
        }
        CountFamily::Aa => {
            let p = take_params(params, 3, "s,t,a")?;
            let n = count_aa(p[0], p[1], p[2])?;
            Ok((p, n))
        }
        CountFamily::Anderson => {
            let p = take_params(params, 2, "s,t")?;
            let n = rational_catalan(p[0], p[1])?;
            Ok((p, n))
        }
    }
}

fn count_report<W: Write>(
    family: &str,
    params: &[u64],
    count: &num_bigint::BigUint,
    average: Option<&BigRational>,
    conjecture: Option<&BigRational>,
    format: Format,
    out: &mut W,
) -> Result<u8> {
    let matches = match (average, conjecture) {
        (Some(a), Some(c)) => Some(a == c),
        _ => None,
    };
    let params_text = params
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",");
    match format {
        Format::Text => {
            write!(out, "family={family} params={params_text} count={count}").ok();
            if let Some(a) = average {
                write!(out, " average={}", rational_to_string(a)).ok();
            }
            if let Some(c) = conjecture {
                write!(out, " conjecture={}", rational_to_string(c)).ok();
            }
            if let Some(m) = matches {
                write!(out, " match={m}").ok();
            }
            writeln!(out).ok();
        }
        Format::Json => {
            return write_json(
                out,
                &json!({
                    "family": family,
                    "params": params,
                    "count": count.to_string(),
                    "average": average.map(rational_to_string),
                    "conjecture": conjecture.map(rational_to_string),
                    "match": matches,
                }),
            );
        }
        Format::Csv => {
            writeln!(out, "family,params,count,average,conjecture,match").ok();
            writeln!(
                out,
                "{family},\"{params_text}\",{count},{},{},{}",
                average.map(rational_to_string).unwrap_or_default(),
                conjecture.map(rational_to_string).unwrap_or_default(),
                matches.map(|m| m.to_string()).unwrap_or_default()
            )
            .ok();
        }
    }
    Ok(0)
}

fn cmd_count<W: Write>(
    family: CountFamily,
    params: &str,
    format: Format,
    out: &mut W,
) -> Result<u8> {
    let (p, n) = count_value(family, params)?;
    count_report(family.as_str(), &p, &n, None, None, format, out)
}

fn cmd_avg<W: Write>(family: CountFamily, params: &str, format: Format, out: &mut W) -> Result<u8> {
    let (p, pairs, conjecture) = match family {
        CountFamily::Ss => {
            let p = take_params(params, 3, "s,a,b")?;
            let pairs = ss_members(p[0], p[0], p[1], p[2])?;
            let conjecture = ss_conjecture(p[0], p[1], p[2])?;
            (p, pairs, conjecture)
        }
        CountFamily::T0 => {
            let p = take_params(params, 3, "s,a,b")?;
            let pairs = t0_members(p[0], p[1], p[2])?;
            let conjecture = t0_conjecture(p[0], p[1], p[2])?;
            (p, pairs, conjecture)
        }
        CountFamily::Aa => {
            let p = take_params(params, 3, "s,t,a")?;
            let pairs = aa_members(p[0], p[1], p[2])?;
            let conjecture = aa_conjecture(p[0], p[1], p[2])?;
            (p, pairs, conjecture)
        }
        CountFamily::Anderson => {
            return Err(Error::Precondition(
                "avg supports families ss, t0 and aa".into(),
            ));
        }
    };
    let members: Vec<Multipartition> = pairs
        .into_iter()
        .map(|(la, mu)| Multipartition::new(vec![la, mu]).expect("level 2"))
        .collect();
    let average = average_size(&members)?;
    let count = num_bigint::BigUint::from(members.len());
    count_report(
        family.as_str(),
        &p,
        &count,
        Some(&average),
        Some(&conjecture),
        format,
        out,
    )
}

fn cmd_stcores<W: Write>(s: u64, t: u64, list: bool, format: Format, out: &mut W) -> Result<u8> {
    let cores = st_cores(s, t)?;
    match format {
        Format::Text => {
            if list {
                for c in &cores {
                    writeln!(out, "{c}").ok();
                }
            }
            writeln!(out, "s={s} t={t} count={}", cores.len()).ok();
        }
        Format::Json => {
            let listed: Option<Vec<String>> =
                list.then(|| cores.iter().map(|c| c.to_string()).collect());
            return write_json(
                out,
                &json!({"s": s, "t": t, "count": cores.len(), "cores": listed}),
            );
        }
        Format::Csv => {
            writeln!(out, "core,size").ok();
            if list {
                for c in &cores {
                    writeln!(out, "{c},{}", c.size()).ok();
                }
            }
        }
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_codec<W: Write>(
    direction: Direction,
    family: CodecFamily,
    params: &str,
    word: Option<String>,
    partition: Option<String>,
    mp: Option<String>,
    format: Format,
    out: &mut W,
) -> Result<u8> {
    let (word_text, result_text) = match (family, direction) {
        (CodecFamily::St, Direction::Decode) => {
            let p = take_params(params, 2, "s,t")?;
            let w: CyclicWord = word
                .ok_or_else(|| Error::Parse("decode needs --word".into()))?
                .parse()?;
            let la = st_decode(&w, p[0], p[1])?;
            (w.to_string(), la.to_string())
        }
        (CodecFamily::St, Direction::Encode) => {
            let p = take_params(params, 2, "s,t")?;
            let la: Partition = partition
                .ok_or_else(|| Error::Parse("st encode needs --partition".into()))?
                .parse()?;
            let w = st_encode(&la, p[0], p[1])?;
            (w.to_string(), la.to_string())
        }
        (CodecFamily::Aa, Direction::Decode) => {
            let p = take_params(params, 3, "s,t,a")?;
            let w: CyclicWord = word
                .ok_or_else(|| Error::Parse("decode needs --word".into()))?
                .parse()?;
            let (la, mu) = aa_decode(&w, p[0], p[1], p[2])?;
            (w.to_string(), format!("{la}|{mu}"))
        }
        (CodecFamily::Aa, Direction::Encode) => {
            let p = take_params(params, 3, "s,t,a")?;
            let m: Multipartition = mp
                .ok_or_else(|| Error::Parse("aa encode needs --mp".into()))?
                .parse()?;
            if m.level() != 2 {
                return Err(Error::Precondition("aa encode needs a bipartition".into()));
            }
            let w = aa_encode(m.component(0), m.component(1), p[0], p[1], p[2])?;
            (w.to_string(), m.to_string())
        }
    };
    match format {
        Format::Text => {
            writeln!(out, "word={word_text} object={result_text}").ok();
        }
        Format::Json => {
            let family_text = match family {
                CodecFamily::St => "st",
                CodecFamily::Aa => "aa",
            };
            return write_json(
                out,
                &json!({"family": family_text, "word": word_text, "object": result_text}),
            );
        }
        Format::Csv => {
            writeln!(out, "word,object").ok();
            writeln!(out, "{word_text},{result_text}").ok();
        }
    }
    Ok(0)
}

fn cmd_verify<W: Write>(scale: Scale, out: &mut W) -> Result<u8> {
    let suites = verify_suites(scale);
    let mut failures = 0;
    for (name, run) in suites {
        match run() {
            Ok(()) => {
                writeln!(out, "PASS {name}").ok();
            }
            Err(msg) => {
                failures += 1;
                writeln!(out, "FAIL {name}: {msg}").ok();
            }
        }
    }
    if failures == 0 {
        writeln!(out, "all suites passed").ok();
        Ok(0)
    } else {
        Err(Error::Precondition(format!("{failures} suites failed")))
    }
}

type Suite = (
    &'static str,
    Box<dyn Fn() -> std::result::Result<(), String>>,
);

fn verify_suites(scale: Scale) -> Vec<Suite> {
    let (max_n, max_s) = match scale {
        Scale::Small => (6u64, 4u64),
        Scale::Full => (8, 6),
    };
    vec![
        (
            "hook-counts-match-diagram",
            Box::new(move || {
                for n in 0..=max_n {
                    for la in crate::partitions::partitions_of(n) {
                        let conj = la.conjugate();
                        for a in 1..=max_n.max(1) {
                            let direct: u64 = (1..=la.len())
                                .map(|row| {
                                    (1..=la.part(row))
                                        .filter(|&col| {
                                            la.part(row) - col + conj.part(col as usize)
                                                - row as u64
                                                + 1
                                                == a
                                        })
                                        .count() as u64
                                })
                                .sum();
                            let via_beta = la.hook_count(a).map_err(|e| e.to_string())?;
                            if direct != via_beta {
                                return Err(format!("{la} hook {a}: {via_beta} vs {direct}"));
                            }
                        }
                    }
                }
                Ok(())
            }),
        ),
        (
            "littlewood-content-uniqueness",
            Box::new(move || {
                for n in 0..=max_n {
                    let all = crate::partitions::partitions_of(n);
                    for s in 2..=max_s {
                        for la in &all {
                            let content = la.content(s, 0);
                            let unique =
                                !all.iter().any(|mu| mu != la && mu.content(s, 0) == content);
                            if la.is_s_core(s) != unique {
                                return Err(format!("{la} s={s}"));
                            }
                        }
                    }
                }
                Ok(())
            }),
        ),
        (
            "core-definition-triangle",
            Box::new(move || {
                let guard = crate::multicore::BruteForceGuard::default();
                for l in 1..=2usize {
                    for n in 0..=max_n.min(5) {
                        for m in crate::multicore::multipartitions_of(l, n) {
                            for s in 0..=max_s {
                                for c0 in -1..=1i64 {
                                    for c1 in -1..=1i64 {
                                        let charges = if l == 1 { vec![c0] } else { vec![c0, c1] };
                                        let d = Datum::new(s, charges).unwrap();
                                        let fast = is_core(&m, &d).map_err(|e| e.to_string())?;
                                        let brute =
                                            crate::multicore::is_core_bruteforce(&m, &d, guard)
                                                .map_err(|e| e.to_string())?;
                                        let w = weight(&m, &d).map_err(|e| e.to_string())?;
                                        if fast != brute || fast != (w == 0) {
                                            return Err(format!(
                                                "{m} under {d}: core={fast} brute={brute} weight={w}"
                                            ));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
                Ok(())
            }),
        ),
        (
            "orbit-equals-filter",
            Box::new(move || {
                for text in ["3:0,1", "2:0,0", "0:0,1"] {
                    let d: Datum = text.parse().unwrap();
                    let orbit = orbit_members(&d, max_n).map_err(|e| e.to_string())?;
                    let filtered: Vec<Multipartition> =
                        crate::multicore::multipartitions_up_to(d.level(), max_n)
                            .into_iter()
                            .filter(|m| is_core(m, &d).unwrap())
                            .collect();
                    if orbit != filtered {
                        return Err(format!("datum {text}"));
                    }
                }
                Ok(())
            }),
        ),
        (
            "sandwich-counts-binomial",
            Box::new(move || {
                for s in 1..=max_s {
                    for n in 0..=max_n {
                        for p in crate::partitions::partitions_of(n)
                            .iter()
                            .filter(|p| p.is_s_core(s))
                        {
                            for (c, d) in [(0i64, 1i64), (2, 0), (-1, 1)] {
                                let e = (c - d).rem_euclid(s as i64);
                                let partners = crate::multicore::sandwich_partners(p, s, c, d)
                                    .map_err(|e| e.to_string())?;
                                let expected = crate::enumeration::binomial(s as i64, e);
                                if num_bigint::BigUint::from(partners.len()) != expected {
                                    return Err(format!("{p} s={s} c={c} d={d}"));
                                }
                            }
                        }
                    }
                }
                Ok(())
            }),
        ),
        (
            "tuple-count-inclusion-exclusion",
            Box::new(move || {
                for g in 1..=max_s {
                    for mult in 1..=3u64 {
                        let s = g * mult;
                        for a in 0..=s {
                            let formula =
                                crate::enumeration::count_u(g, s, a).map_err(|e| e.to_string())?;
                            let brute = crate::enumeration::all_u_tuples(g, s, a).unwrap().len();
                            if formula != num_bigint::BigUint::from(brute) {
                                return Err(format!("g={g} s={s} a={a}"));
                            }
                        }
                    }
                }
                Ok(())
            }),
        ),
        (
            "codec-roundtrips",
            Box::new(move || {
                for (s, t) in [(2u64, 3u64), (3, 4), (3, 5)] {
                    for core in st_cores(s, t).map_err(|e| e.to_string())? {
                        let w = st_encode(&core, s, t).map_err(|e| e.to_string())?;
                        if st_decode(&w, s, t).map_err(|e| e.to_string())? != core {
                            return Err(format!("st ({s},{t}) {core}"));
                        }
                    }
                }
                for (s, t, a) in [(3u64, 4u64, 1u64), (3, 5, 2)] {
                    for w in crate::enumeration::necklaces(a, s - a, t - a) {
                        let (la, mu) = aa_decode(&w, s, t, a).map_err(|e| e.to_string())?;
                        let back = aa_encode(&la, &mu, s, t, a).map_err(|e| e.to_string())?;
                        if back != w {
                            return Err(format!("aa ({s},{t},{a}) {w}"));
                        }
                    }
                }
                Ok(())
            }),
        ),
        (
            "finiteness-regression",
            Box::new(move || {
                for (text, expect_finite) in [
                    ("0:1,3,0;0:3,0,1", true),
                    ("0:0,0;0:0,1", true),
                    ("3:0,1;9:0,5", true),
                    ("3:0,1", false),
                    ("6:0,0;10:0,4", false),
                    ("0:0,1;0:0,2", false),
                ] {
                    let ts: DatumSet = text.parse().unwrap();
                    let v = decide_finite(&ts);
                    if v.finite != expect_finite {
                        return Err(format!("{text}: verdict {v:?}"));
                    }
                    if !v.finite {
                        let lo = crate::finiteness::bounded_members(&ts, 6)
                            .map_err(|e| e.to_string())?
                            .len();
                        let hi = crate::finiteness::bounded_members(&ts, 10)
                            .map_err(|e| e.to_string())?
                            .len();
                        if hi <= lo {
                            return Err(format!("{text}: counts {lo} -> {hi} do not grow"));
                        }
                    }
                }
                Ok(())
            }),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (u8, String, String) {
        let mut argv = vec!["coremp".to_string()];
        argv.extend(args.iter().map(|s| s.to_string()));
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(&argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn check_example() {
        let (code, out, _) =
            run_args(&["check", "--datum", "4:0,2,1", "--mp", "[2]|[4,1,1]|[1,1]"]);
        assert_eq!(code, 0);
        assert_eq!(out, "core=true weight=0\n");
    }

    #[test]
    fn count_example() {
        let (code, out, _) = run_args(&["count", "--family", "aa", "--params", "3,4,1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "family=aa params=3,4,1 count=10\n");
    }

    #[test]
    fn enumerate_exit_code_on_infinite() {
        let (code, _, err) = run_args(&["enumerate", "--data", "3:0,1", "--complete"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn parse_error_exit_code() {
        let (code, _, err) = run_args(&["check", "--datum", "nonsense", "--mp", "[1]"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn precondition_exit_code() {
        let (code, _, err) = run_args(&["count", "--family", "t0", "--params", "2,1,1"]);
        assert_eq!(code, 3);
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn avg_example() {
        let (code, out, _) = run_args(&["avg", "--family", "t0", "--params", "3,1,2"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "family=t0 params=3,1,2 count=6 average=5/3 conjecture=5/3 match=true\n"
        );
    }

    #[test]
    fn orbit_modulus_one_convention() {
        let (code, out, _) = run_args(&["orbit", "--datum", "1:0,4", "--max-size", "6"]);
        assert_eq!(code, 0);
        assert_eq!(out, "[]|[]\ncount=1\n");
    }

    #[test]
    fn usage_error_is_exit_one() {
        let (code, _, _) = run_args(&["no-such-command"]);
        assert_eq!(code, 1);
    }
}
