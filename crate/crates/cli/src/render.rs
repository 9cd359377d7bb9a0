//! Text and machine renderings of a [`RunReport`].

use homlie::{Check, StructureTensor, Vector};
use serde::Serialize;

use crate::run::{Artifact, ArtifactData, RunReport, Section};

fn defect_text(defect: &Vector, labels: &[String]) -> String {
    if defect.dim() == labels.len() {
        defect.to_combination(labels)
    } else if defect.dim() == 1 {
        defect.get(0).to_string()
    } else {
        defect.to_string()
    }
}

fn check_line(check: &Check, labels: &[String]) -> String {
    let tag = match (check.passed, check.informational) {
        (true, false) => "PASS",
        (false, false) => "FAIL",
        (true, true) => "yes ",
        (false, true) => "no  ",
    };
    let mut line = format!(
        "  {tag} {} ({}/{})",
        check.name,
        check.evaluated - check.failed,
        check.evaluated
    );
    if let Some(w) = &check.witness {
        if !w.indices.is_empty() {
            let at: Vec<String> = w.indices.iter().map(|i| (i + 1).to_string()).collect();
            line.push_str(&format!(" at ({}): {}", at.join(","), defect_text(&w.defect, labels)));
        }
    }
    line
}

fn artifact_lines(artifact: &Artifact) -> Vec<String> {
    let label = |i: usize| artifact.labels.get(i).cloned().unwrap_or_else(|| format!("e{}", i + 1));
    match &artifact.data {
        ArtifactData::Table(t) | ArtifactData::Torsion(t) => {
            let torsion = matches!(artifact.data, ArtifactData::Torsion(_));
            let n = t.dim();
            let mut lines = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    let p = t.basis_product(i, j);
                    if p.is_zero() {
                        continue;
                    }
                    let lhs = if torsion {
                        format!("N({}, {})", label(i), label(j))
                    } else {
                        format!("{}·{}", label(i), label(j))
                    };
                    lines.push(format!("  {lhs} = {}", p.to_combination(&artifact.labels)));
                }
            }
            if lines.is_empty() {
                lines.push("  (all zero)".to_string());
            }
            lines
        }
        ArtifactData::Grid(m) => m
            .to_rows()
            .into_iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                format!("  [{}]", cells.join(", "))
            })
            .collect(),
        ArtifactData::Vectors(vs) => vs
            .iter()
            .map(|v| format!("  {}", v.to_combination(&artifact.labels)))
            .collect(),
    }
}

pub fn render_text(run: &RunReport) -> String {
    let mut out = format!("homlie {}: {}\n", run.command, run.inputs.join(", "));
    for Section { report, labels } in &run.sections {
        out.push('\n');
        out.push_str(&report.title);
        out.push('\n');
        for check in &report.checks {
            out.push_str(&check_line(check, labels));
            out.push('\n');
        }
    }
    for artifact in &run.artifacts {
        out.push('\n');
        out.push_str(&artifact.name);
        out.push('\n');
        for line in artifact_lines(artifact) {
            out.push_str(&line);
            out.push('\n');
        }
    }
    out.push_str(&format!("\noverall: {}\n", if run.overall() { "PASS" } else { "FAIL" }));
    out
}

#[derive(Serialize)]
struct MachineWitness {
    indices: Vec<usize>,
    defect: Vec<String>,
    defect_text: String,
}

#[derive(Serialize)]
struct MachineCheck {
    name: String,
    passed: bool,
    informational: bool,
    evaluated: usize,
    failed: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<MachineWitness>,
}

#[derive(Serialize)]
struct MachineSection {
    title: String,
    passed: bool,
    checks: Vec<MachineCheck>,
}

#[derive(Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "data")]
enum MachineData {
    Table(Vec<(usize, usize, usize, String)>),
    Torsion(Vec<(usize, usize, usize, String)>),
    Grid(Vec<Vec<String>>),
    Vectors(Vec<Vec<String>>),
}

#[derive(Serialize)]
struct MachineArtifact {
    name: String,
    labels: Vec<String>,
    #[serde(flatten)]
    data: MachineData,
}

#[derive(Serialize)]
struct MachineReport {
    command: String,
    inputs: Vec<String>,
    overall: bool,
    exit_code: u8,
    sections: Vec<MachineSection>,
    artifacts: Vec<MachineArtifact>,
}

fn triples(t: &StructureTensor) -> Vec<(usize, usize, usize, String)> {
    t.nonzero_entries()
        .into_iter()
        .map(|(i, j, k, c)| (i + 1, j + 1, k + 1, c.to_string()))
        .collect()
}

fn strings(v: &Vector) -> Vec<String> {
    v.entries().iter().map(|c| c.to_string()).collect()
}

/// The whole report as one JSON document; indices are 1-based.
pub fn render_machine(run: &RunReport) -> String {
    let sections = run
        .sections
        .iter()
        .map(|s| MachineSection {
            title: s.report.title.clone(),
            passed: s.report.passed(),
            checks: s
                .report
                .checks
                .iter()
                .map(|c| MachineCheck {
                    name: c.name.clone(),
                    passed: c.passed,
                    informational: c.informational,
                    evaluated: c.evaluated,
                    failed: c.failed,
                    witness: c.witness.as_ref().map(|w| MachineWitness {
                        indices: w.indices.iter().map(|i| i + 1).collect(),
                        defect: strings(&w.defect),
                        defect_text: defect_text(&w.defect, &s.labels),
                    }),
                })
                .collect(),
        })
        .collect();
    let artifacts = run
        .artifacts
        .iter()
        .map(|a| MachineArtifact {
            name: a.name.clone(),
            labels: a.labels.clone(),
            data: match &a.data {
                ArtifactData::Table(t) => MachineData::Table(triples(t)),
                ArtifactData::Torsion(t) => MachineData::Torsion(triples(t)),
                ArtifactData::Grid(m) => MachineData::Grid(
                    m.to_rows()
                        .into_iter()
                        .map(|row| row.iter().map(|c| c.to_string()).collect())
                        .collect(),
                ),
                ArtifactData::Vectors(vs) => MachineData::Vectors(vs.iter().map(strings).collect()),
            },
        })
        .collect();
    let report = MachineReport {
        command: run.command.clone(),
        inputs: run.inputs.clone(),
        overall: run.overall(),
        exit_code: run.exit_code(),
        sections,
        artifacts,
    };
    let mut out = serde_json::to_string_pretty(&report).expect("reports serialize");
    out.push('\n');
    out
}
