use std::fs;
use std::path::Path;

use serde_json::json;
use wt_laurent::{parse_rational, ExactRational};
use wt_qgroup::{gen_on_mixed, parse_generator};
use wt_rep::{matrix_of_word, OperatorMatrix};
use wt_skein::{structure_constants, Normalizer, TangleElement};
use wt_tangle::dsl::{parse_document, parse_word};
use wt_tangle::{Connector, Orientation, TangleType, TangleWord, Vertex};
use wt_duality::{classical_flip, hecke_to_walled};

use crate::args::{Command, WordInput};
use crate::{err, verify, CliError, Report};

fn read_word(ty: Option<&str>, word: Option<&str>, file: Option<&Path>, what: &str) -> Result<TangleWord, CliError> {
    match (ty, word, file) {
        (_, _, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| CliError(format!("{}: {e}", path.display())))?;
            parse_document(&text).map_err(|e| CliError(format!("{}: {e}", path.display())))
        }
        (Some(ty), word, None) => parse_word(ty, word.unwrap_or("")).map_err(|e| CliError(format!("{what}: {e}"))),
        (None, _, None) => Err(CliError(format!("{what}: give a type and word, or a file"))),
    }
}

fn word_input(input: &WordInput) -> Result<TangleWord, CliError> {
    read_word(input.ty.as_deref(), input.word.as_deref(), input.file.as_deref(), "word")
}

fn check_n(n: u32) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError("n must be at least 1".into()));
    }
    Ok(())
}

fn element_report(e: &TangleElement) -> Report {
    Report { json: serde_json::to_value(e).expect("elements serialize"), human: e.to_string(), passed: true }
}

fn matrix_report(m: &OperatorMatrix, q0: Option<&str>) -> Result<Report, CliError> {
    let Some(q0) = q0 else {
        return Ok(Report { json: serde_json::to_value(m).map_err(err)?, human: m.to_string(), passed: true });
    };
    let x = parse_rational(q0).map_err(err)?;
    let (rows, cols) = m.dims();
    let mut human = format!("n={} at q = {x}: {rows}×{cols}\n", m.n());
    let mut entries = Vec::new();
    for (r, c, v) in m.entries() {
        let value = v.eval(&x).map_err(err)?;
        if value == ExactRational::default() {
            continue;
        }
        human.push_str(&format!("{r:?} -> {c:?}: {value}\n"));
        entries.push(json!({ "row": r, "col": c, "value": value.to_string() }));
    }
    let json = json!({ "n": m.n(), "q0": x.to_string(), "rows": rows, "cols": cols, "entries": entries });
    Ok(Report { json, human, passed: true })
}

fn parse_connector(text: &str, ty: TangleType) -> Result<Connector, CliError> {
    let edges = text
        .split(',')
        .map(|part| {
            let (a, b) = part
                .trim()
                .split_once('-')
                .ok_or_else(|| CliError(format!("edge {part:?} should look like T1-B2")))?;
            Ok((a.trim().parse::<Vertex>().map_err(err)?, b.trim().parse::<Vertex>().map_err(err)?))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Connector::from_edges(ty, &edges).map_err(err)
}

fn edge_list(c: &Connector) -> Vec<[String; 2]> {
    c.edges().iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect()
}

pub(crate) fn execute(cmd: &Command, seed: u64) -> Result<Report, CliError> {
    match cmd {
        Command::Normalize { n, input } => {
            check_n(*n)?;
            Ok(element_report(&Normalizer::new(*n).normalize(&word_input(input)?)))
        }
        Command::Multiply { n, upper_type, upper, upper_file, lower_type, lower, lower_file } => {
            check_n(*n)?;
            let a = read_word(upper_type.as_deref(), upper.as_deref(), upper_file.as_deref(), "upper")?;
            let b = read_word(lower_type.as_deref(), lower.as_deref(), lower_file.as_deref(), "lower")?;
            let norm = Normalizer::new(*n);
            let product = norm.multiply(&norm.normalize(&a), &norm.normalize(&b)).map_err(err)?;
            Ok(element_report(&product))
        }
        Command::Matrix { n, input, generators, q0 } => {
            check_n(*n)?;
            let m = match generators {
                Some(gens) => {
                    let ty = input.ty.as_deref().ok_or_else(|| CliError("--generators needs --type".into()))?;
                    let seq = wt_tangle::dsl::parse_boundary(ty).map_err(CliError)?;
                    let mut acc = OperatorMatrix::identity(seq.clone(), *n);
                    for tok in gens.split_whitespace() {
                        let g = parse_generator(tok).map_err(err)?;
                        acc = acc.mul(&gen_on_mixed(&g, &seq, *n).map_err(err)?).map_err(err)?;
                    }
                    acc
                }
                None => matrix_of_word(&word_input(input)?, *n),
            };
            matrix_report(&m, q0.as_deref())
        }
        Command::StructureConstants { n, ty } => {
            check_n(*n)?;
            let seq = wt_tangle::dsl::parse_boundary(ty).map_err(CliError)?;
            let ty = TangleType::square(seq);
            let basis = wt_tangle::enumerate_connectors(&ty);
            let table = structure_constants(&ty, *n).map_err(err)?;
            let mut human = format!("basis of {ty} at n={n}:\n");
            for (k, c) in basis.iter().enumerate() {
                human.push_str(&format!("  c{k} = {c}\n"));
            }
            for (i, row) in table.iter().enumerate() {
                for (j, e) in row.iter().enumerate() {
                    human.push_str(&format!("c{i}·c{j} = {e}\n"));
                }
            }
            let json = json!({
                "type": ty.to_string(),
                "n": n,
                "basis": basis.iter().map(edge_list).collect::<Vec<_>>(),
                "products": table,
            });
            Ok(Report { json, human, passed: true })
        }
        Command::HeckeToWalled { n, r, s, word } => {
            check_n(*n)?;
            let down = "v".repeat(r + s);
            let t = parse_word(&format!("{down} | {down}"), word).map_err(|e| CliError(format!("word: {e}")))?;
            let image = hecke_to_walled(&t, *r, *s).map_err(err)?;
            let element = Normalizer::new(*n).normalize(&image);
            let human = format!("{}\n= {element}", image.to_dsl());
            let json = json!({ "word": image.to_dsl(), "element": element });
            Ok(Report { json, human, passed: true })
        }
        Command::Flip { r, s, connector } => {
            let d = parse_connector(connector, TangleType::square(vec![Orientation::Down; r + s]))?;
            let flipped = classical_flip(&d, *r, *s).map_err(err)?;
            let json = json!({ "r": r, "s": s, "input": edge_list(&d), "flipped": edge_list(&flipped) });
            Ok(Report { json, human: flipped.to_string(), passed: true })
        }
        Command::Verify { suite } => verify::run_suite(suite, seed),
    }
}
