//! Command dispatch over parsed documents.

use homlie::geometry::{check_levi_civita, check_metric, check_symplectic, levi_civita};
use homlie::homalg::{check_hom_lie, check_nijenhuis, nijenhuis, StructureTensor};
use homlie::parakahler::{
    check_almost_product, check_para_hermitian, check_para_kahler, eigensplit, fundamental_form, theorem_battery,
};
use homlie::phasespace::{
    canonical_forms, check_admissible_extension, check_extension, curvature_profile, extend_product,
    extract_phase_space,
};
use homlie::report::flag;
use homlie::{CheckReport, Error, Matrix, Vector};

use crate::document::{AlgebraDocument, DocumentError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Check,
    LeviCivita,
    Nijenhuis,
    ParaKahler,
    PhaseSpaceBuild,
    PhaseSpaceExtract,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::LeviCivita => "levi-civita",
            Command::Nijenhuis => "nijenhuis",
            Command::ParaKahler => "para-kahler",
            Command::PhaseSpaceBuild => "phase-space build",
            Command::PhaseSpaceExtract => "phase-space extract",
        }
    }

    fn arity(&self) -> usize {
        match self {
            Command::PhaseSpaceBuild => 2,
            _ => 1,
        }
    }
}

/// A report section with the basis labels its witnesses refer to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    pub report: CheckReport,
    pub labels: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArtifactData {
    /// Nonzero structure constants `(i, j, k, c)`, 0-based.
    Table(StructureTensor),
    /// `N(e_i, e_j)` stored like a product table.
    Torsion(StructureTensor),
    Grid(Matrix),
    Vectors(Vec<Vector>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Artifact {
    pub name: String,
    pub labels: Vec<String>,
    pub data: ArtifactData,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<String>,
    pub sections: Vec<Section>,
    pub artifacts: Vec<Artifact>,
}

impl RunReport {
    pub fn overall(&self) -> bool {
        self.sections.iter().all(|s| s.report.passed())
    }

    pub fn exit_code(&self) -> u8 {
        if self.overall() {
            0
        } else {
            1
        }
    }

    fn section(&mut self, report: CheckReport, labels: &[String]) {
        self.sections.push(Section {
            report,
            labels: labels.to_vec(),
        });
    }

    fn artifact(&mut self, name: &str, labels: &[String], data: ArtifactData) {
        self.artifacts.push(Artifact {
            name: name.to_string(),
            labels: labels.to_vec(),
            data,
        });
    }

    /// Records a mathematical failure as a failed section; other library
    /// errors indicate malformed input.
    fn absorb(&mut self, title: &str, error: Error, labels: &[String]) -> Result<(), DocumentError> {
        match error {
            Error::PreconditionFailed { what, report } => {
                let mut section = CheckReport::new(title);
                if let Some(report) = report {
                    section.absorb("", *report);
                }
                section.push(flag(format!("precondition: {what}"), false, None));
                self.section(section, labels);
                Ok(())
            }
            Error::Singular => {
                let mut section = CheckReport::new(title);
                section.push(flag("nondegenerate linear system", false, None));
                self.section(section, labels);
                Ok(())
            }
            other => Err(DocumentError::Validation(other.to_string())),
        }
    }
}

/// Runs `command` on the given documents. `Err` means the input was
/// unusable; check failures are reported inside the `RunReport`.
pub fn run_command(command: &Command, documents: &[AlgebraDocument]) -> Result<RunReport, DocumentError> {
    if documents.len() != command.arity() {
        return Err(DocumentError::Validation(format!(
            "{} expects {} document(s), got {}",
            command.name(),
            command.arity(),
            documents.len()
        )));
    }
    let mut run = RunReport {
        command: command.name().to_string(),
        inputs: documents.iter().map(|d| d.name.clone()).collect(),
        sections: Vec::new(),
        artifacts: Vec::new(),
    };
    let doc = &documents[0];
    let labels = &doc.basis;
    match command {
        Command::Check => {
            let algebra = doc.hom_lie()?;
            run.section(check_hom_lie(algebra.bracket(), algebra.twist()), labels);
            if let Some(omega) = doc.omega_form()? {
                run.section(check_symplectic(&algebra, &omega).map_err(validation)?, labels);
            }
            if let Some(metric) = doc.metric_form()? {
                run.section(check_metric(&algebra, &metric).map_err(validation)?, labels);
            }
        }
        Command::LeviCivita => {
            let algebra = doc.hom_lie()?;
            let metric = doc.require_metric()?;
            run.section(check_metric(&algebra, &metric).map_err(validation)?, labels);
            match levi_civita(&algebra, &metric) {
                Ok(product) => {
                    run.section(
                        check_levi_civita(&algebra, &metric, &product).map_err(validation)?,
                        labels,
                    );
                    run.artifact("Levi-Civita product", labels, ArtifactData::Table(product));
                }
                Err(e) => run.absorb("Levi-Civita product", e, labels)?,
            }
        }
        Command::Nijenhuis => {
            let algebra = doc.hom_lie()?;
            let k = doc.structure()?;
            run.section(
                check_nijenhuis(algebra.bracket(), algebra.twist(), k.matrix()).map_err(validation)?,
                labels,
            );
            let n = algebra.dim();
            let mut torsion = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    let value = nijenhuis(algebra.bracket(), algebra.twist(), k.matrix(), i, j).map_err(validation)?;
                    for (l, c) in value.into_entries().into_iter().enumerate() {
                        torsion.push((i, j, l, c));
                    }
                }
            }
            let table = StructureTensor::from_entries(n, torsion).map_err(validation)?;
            run.artifact("Nijenhuis torsion N(ei, ej)", labels, ArtifactData::Torsion(table));
        }
        Command::ParaKahler => {
            let algebra = doc.hom_lie()?;
            let metric = doc.require_metric()?;
            let k = doc.structure()?;
            run.section(check_almost_product(&algebra, &k), labels);
            match check_para_hermitian(&algebra, &metric, &k) {
                Ok(r) => run.section(r, labels),
                Err(e) => run.absorb("para-Hermitian structure", e, labels)?,
            }
            match check_para_kahler(&algebra, &metric, &k) {
                Ok(r) => run.section(r, labels),
                Err(e) => run.absorb("para-Kähler structure", e, labels)?,
            }
            if run.overall() {
                match theorem_battery(&algebra, &metric, &k) {
                    Ok(r) => run.section(r, labels),
                    Err(e) => run.absorb("para-Kähler theorem", e, labels)?,
                }
                if let Ok(split) = eigensplit(&algebra, &k) {
                    run.artifact("g¹ basis", labels, ArtifactData::Vectors(split.plus));
                    run.artifact("g⁻¹ basis", labels, ArtifactData::Vectors(split.minus));
                }
                if let Ok(omega) = fundamental_form(&algebra, &metric, &k) {
                    run.artifact("fundamental form Ω", labels, ArtifactData::Grid(omega.matrix().clone()));
                }
                if let Ok(product) = levi_civita(&algebra, &metric) {
                    run.artifact("Levi-Civita product", labels, ArtifactData::Table(product));
                }
            }
        }
        Command::PhaseSpaceBuild => {
            let v = doc.hom_algebra()?;
            let vstar = documents[1].hom_algebra()?;
            if v.dim() != vstar.dim() {
                return Err(DocumentError::Validation(format!(
                    "V has dimension {} but V* has dimension {}",
                    v.dim(),
                    vstar.dim()
                )));
            }
            let total_labels = split_labels(&doc.basis, &documents[1].basis);
            match extend_product(&v, &vstar) {
                Ok(bundle) => {
                    run.section(check_extension(&bundle), &total_labels);
                    run.section(curvature_profile(&bundle), &total_labels);
                    let admissible = check_admissible_extension(&bundle);
                    let hom_lie = admissible.verdict("commutator is hom-Lie");
                    run.section(admissible, &total_labels);
                    if hom_lie {
                        match canonical_forms(&bundle) {
                            Ok(r) => run.section(r, &total_labels),
                            Err(e) => run.absorb("phase space certificate", e, &total_labels)?,
                        }
                    } else {
                        let mut skipped = CheckReport::new("phase space certificate");
                        skipped.push(flag("precondition: commutator is hom-Lie", false, None));
                        run.section(skipped, &total_labels);
                    }
                    run.artifact(
                        "extended product",
                        &total_labels,
                        ArtifactData::Table(bundle.total().product().clone()),
                    );
                    run.artifact(
                        "twist Φ",
                        &total_labels,
                        ArtifactData::Grid(bundle.total().twist().clone()),
                    );
                }
                Err(e) => run.absorb("phase space extension", e, &total_labels)?,
            }
        }
        Command::PhaseSpaceExtract => {
            let algebra = doc.hom_lie()?;
            let metric = doc.require_metric()?;
            let k = doc.structure()?;
            match extract_phase_space(&algebra, &metric, &k) {
                Ok(extraction) => {
                    let bundle = &extraction.bundle;
                    let n = bundle.half_dim();
                    let total_labels = split_labels(
                        &(1..=n).map(|i| format!("u{i}")).collect::<Vec<_>>(),
                        &(1..=n).map(|i| format!("α{i}")).collect::<Vec<_>>(),
                    );
                    run.section(extraction.certificate.clone(), &total_labels);
                    match canonical_forms(bundle) {
                        Ok(r) => run.section(r, &total_labels),
                        Err(e) => run.absorb("phase space certificate", e, &total_labels)?,
                    }
                    run.artifact(
                        "split frame (columns u1.., α1..)",
                        labels,
                        ArtifactData::Grid(bundle.frame().clone()),
                    );
                    run.artifact(
                        "identification g⁻¹ → (g¹)*",
                        &[],
                        ArtifactData::Grid(bundle.identification().clone()),
                    );
                    run.artifact(
                        "extended product",
                        &total_labels,
                        ArtifactData::Table(bundle.total().product().clone()),
                    );
                }
                Err(e) => run.absorb("phase space extraction", e, labels)?,
            }
        }
    }
    Ok(run)
}

fn validation(error: Error) -> DocumentError {
    DocumentError::Validation(error.to_string())
}

/// Labels for `V ⊕ V*`; dual labels that clash with `V` get a `*` suffix.
fn split_labels(v: &[String], vstar: &[String]) -> Vec<String> {
    let clash = vstar.iter().any(|l| v.contains(l));
    let dual = vstar.iter().map(|l| if clash { format!("{l}*") } else { l.clone() });
    v.iter().cloned().chain(dual).collect()
}
