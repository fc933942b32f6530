//! The versioned JSON file holding a realified spinor module.

use serde::{Deserialize, Serialize};
use spinor_core::matrix_rep::{degree_of, verify_clifford_condition};
use spinor_core::recipe::{intertwiners, metric_checks};
use spinor_core::{RMatrix, Rational, Signature, SpinorModule};

use crate::error::{CliError, CliResult};

pub const FORMAT_VERSION: u32 = 1;

pub const CONVENTION: &str = "c(e_i)c(e_j) + c(e_j)c(e_i) = -2 g_ij I; e_1..e_r square to +1, e_(r+1)..e_n to -1";

/// Row-major matrix of "p/q" strings.
pub type MatrixStrings = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GammaFileV1 {
    pub format_version: u32,
    pub signature: [usize; 2],
    pub convention: String,
    pub field: String,
    pub real_dim: usize,
    pub family: String,
    pub variant: String,
    pub generators: Vec<MatrixStrings>,
    pub spin_metric: MatrixStrings,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<i8>>,
    /// Right multiplication by an orthonormal basis of Im K.
    #[serde(default)]
    pub right_units: Vec<MatrixStrings>,
    /// A basis of all maps commuting with the generators.
    #[serde(default)]
    pub commutant_basis: Vec<MatrixStrings>,
}

pub fn matrix_to_strings(m: &RMatrix) -> MatrixStrings {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).to_pq_string()).collect()).collect()
}

pub fn matrix_from_strings(rows: &MatrixStrings, what: &str) -> CliResult<RMatrix> {
    let dense = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| s.parse::<Rational>().map_err(|_| CliError::Input(format!("{what}: bad rational {s:?}"))))
                .collect::<CliResult<Vec<_>>>()
        })
        .collect::<CliResult<Vec<_>>>()?;
    let n = dense.len();
    if dense.iter().any(|r| r.len() != n) {
        return Err(CliError::Input(format!("{what}: matrix is not square")));
    }
    if n == 0 {
        return Err(CliError::Input(format!("{what}: matrix is empty")));
    }
    Ok(RMatrix::from_dense(&dense))
}

impl GammaFileV1 {
    pub fn from_module(m: &SpinorModule) -> CliResult<Self> {
        let commutant = intertwiners(m, false)?;
        Ok(GammaFileV1 {
            format_version: FORMAT_VERSION,
            signature: [m.signature.r, m.signature.s],
            convention: CONVENTION.to_string(),
            field: m.field.name().to_string(),
            real_dim: m.real_dim,
            family: m.family.as_str().to_string(),
            variant: m.variant.as_str().to_string(),
            generators: m.generators.iter().map(matrix_to_strings).collect(),
            spin_metric: matrix_to_strings(&m.spin_metric),
            grading: m.grading.clone(),
            right_units: m.right_units.iter().map(matrix_to_strings).collect(),
            commutant_basis: commutant.basis.iter().map(matrix_to_strings).collect(),
        })
    }

    pub fn parse(text: &str) -> CliResult<Self> {
        let file: GammaFileV1 =
            serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed gamma file: {e}")))?;
        if file.format_version != FORMAT_VERSION {
            return Err(CliError::Input(format!("unsupported format_version {}", file.format_version)));
        }
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

/// Outcome of re-verifying a gamma file, one line per check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub lines: Vec<(bool, String)>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|(ok, _)| *ok)
    }

    fn push(&mut self, ok: bool, msg: impl Into<String>) {
        self.lines.push((ok, msg.into()));
    }

    pub fn render(&self) -> String {
        self.lines.iter().map(|(ok, m)| format!("{} {m}\n", if *ok { "PASS" } else { "FAIL" })).collect()
    }
}

fn parse_list(ms: &[MatrixStrings], what: &str) -> CliResult<Vec<RMatrix>> {
    ms.iter().enumerate().map(|(i, m)| matrix_from_strings(m, &format!("{what} {}", i + 1))).collect()
}

/// Rebuild the matrices and re-run every structural check.
pub fn verify_file(file: &GammaFileV1) -> CliResult<VerifyReport> {
    let [r, s] = file.signature;
    let sig = Signature::new(r, s).map_err(|e| CliError::Input(e.to_string()))?;
    let gens = parse_list(&file.generators, "generator")?;
    let metric = matrix_from_strings(&file.spin_metric, "spin_metric")?;
    let units = parse_list(&file.right_units, "right unit")?;
    let commutant = parse_list(&file.commutant_basis, "commutant element")?;
    let d = file.real_dim;

    let mut rep = VerifyReport::default();
    let sizes_ok = gens.iter().chain(&units).chain(&commutant).chain(std::iter::once(&metric)).all(|m| m.rows() == d);
    rep.push(sizes_ok, format!("all matrices are {d}x{d}"));
    if !sizes_ok {
        return Ok(rep);
    }

    let cl = verify_clifford_condition(&gens, sig);
    match (&cl.shape_error, cl.violations.as_slice()) {
        (Some(e), _) => rep.push(false, format!("Clifford condition: {e}")),
        (None, []) => rep.push(true, format!("Clifford condition on {} pairs", cl.checked_pairs)),
        (None, v) => {
            let pairs: Vec<String> = v.iter().map(|(i, j)| format!("({i},{j})")).collect();
            rep.push(false, format!("Clifford condition violated by pairs {}", pairs.join(" ")));
        }
    }

    let mr = metric_checks(&metric, &gens, sig, &units);
    rep.push(mr.symmetric, "spin metric is symmetric");
    rep.push(mr.positive_definite, "spin metric is positive definite");
    rep.push(
        mr.generator_failures.is_empty(),
        if mr.generator_failures.is_empty() {
            "generators are skew (e^2 = -1) or symmetric (e^2 = +1) for the spin metric".to_string()
        } else {
            format!("generators with the wrong adjoint: {:?}", mr.generator_failures)
        },
    );
    rep.push(mr.unit_failures.is_empty(), "right units are skew-adjoint");

    let k = file.field.as_str();
    let expected_units = match k {
        "R" => 0,
        "C" => 1,
        "H" => 3,
        _ => return Err(CliError::Input(format!("unknown field {k:?}"))),
    };
    rep.push(units.len() == expected_units, format!("{} right units for field {k}", units.len()));
    let commute = units.iter().all(|u| gens.iter().all(|g| u.commutes_with(g)));
    rep.push(commute, "right units commute with the generators");
    let comm_ok = commutant.iter().all(|c| gens.iter().all(|g| c.commutes_with(g)));
    rep.push(
        comm_ok && commutant.len() == 1 + expected_units,
        format!("commutant basis of dimension {}", commutant.len()),
    );

    if let Some(grading) = &file.grading {
        let len_ok = grading.len() == d && grading.iter().all(|x| *x == 1 || *x == -1);
        let odd = len_ok && gens.iter().all(|g| degree_of(g, grading) == Some(1));
        rep.push(odd, "generators are odd for the grading");
    }
    Ok(rep)
}
