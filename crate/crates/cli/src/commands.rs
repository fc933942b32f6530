//! The four subcommands, written against in-memory inputs and outputs.

use rayon::prelude::*;
use spinor_core::matrix_rep::algebra_name;
use spinor_core::recipe::{
    assemble_euclidean, assemble_signature, euclidean_dim, even_commutant_factor, intertwiners, minus_allowed,
    octonion_module, spin_metric_verify, sqrt_space_module, table_index, K0_TABLE, K_TABLE,
};
use spinor_core::{Signature, SpinorModule, Variant};

use crate::error::{CliError, CliResult};
use crate::gamma::{verify_file, GammaFileV1, VerifyReport};

/// Which construction `generate` uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenFamily {
    Recipe,
    SqrtSpace,
    Octonion,
}

impl std::str::FromStr for GenFamily {
    type Err = CliError;
    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "recipe" => Ok(GenFamily::Recipe),
            "sqrt-space" => Ok(GenFamily::SqrtSpace),
            "octonion" => Ok(GenFamily::Octonion),
            _ => Err(CliError::Input(format!("unknown family {s:?}; expected recipe, sqrt-space or octonion"))),
        }
    }
}

pub fn parse_signature(s: &str) -> CliResult<(usize, usize)> {
    let bad = || CliError::Input(format!("signature must look like r,s; got {s:?}"));
    let (r, t) = s.split_once(',').ok_or_else(bad)?;
    let r: usize = r.trim().parse().map_err(|_| bad())?;
    let t: usize = t.trim().parse().map_err(|_| bad())?;
    Signature::new(r, t).map_err(|e| CliError::Input(e.to_string()))?;
    Ok((r, t))
}

pub fn build_module(r: usize, s: usize, family: GenFamily, variant: Variant) -> CliResult<SpinorModule> {
    let only_plus = |name: &str| -> CliResult<()> {
        if variant == Variant::Minus {
            return Err(CliError::Input(format!("the {name} family has no minus variant")));
        }
        Ok(())
    };
    match family {
        GenFamily::Recipe => Ok(assemble_signature(r, s, variant)?),
        GenFamily::SqrtSpace => {
            only_plus("sqrt-space")?;
            if r != 0 || !(1..=4).contains(&s) {
                return Err(CliError::Input("the sqrt-space family covers signatures 0,1 to 0,4".into()));
            }
            Ok(sqrt_space_module(s)?)
        }
        GenFamily::Octonion => {
            only_plus("octonion")?;
            if r != 0 || !(4..=8).contains(&s) {
                return Err(CliError::Input("the octonion family covers signatures 0,4 to 0,8".into()));
            }
            Ok(octonion_module(s)?)
        }
    }
}

/// Build, self-verify and serialize a module.
pub fn generate(r: usize, s: usize, family: GenFamily, variant: Variant) -> CliResult<String> {
    let m = build_module(r, s, family, variant)?;
    if !m.clifford_report().passed() || !spin_metric_verify(&m).passed() {
        return Err(CliError::Verification(format!("generated module for ({r},{s}) fails its own checks")));
    }
    let file = GammaFileV1::from_module(&m)?;
    let report = verify_file(&file)?;
    if !report.passed() {
        return Err(CliError::Verification(report.render()));
    }
    Ok(file.to_json())
}

pub fn verify(text: &str) -> CliResult<VerifyReport> {
    verify_file(&GammaFileV1::parse(text)?)
}

/// One classification row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyRow {
    pub n: usize,
    pub variant: Variant,
    pub dim: usize,
    pub k_dim: usize,
    pub k_name: String,
    pub k0_dim: usize,
    pub k0_name: String,
    pub even_commutant_dim: usize,
}

impl ClassifyRow {
    pub fn expected(&self) -> (usize, usize, &'static str, usize, &'static str) {
        let i = table_index(self.n);
        (euclidean_dim(self.n), K_TABLE[i], K_NAMES[i], K0_TABLE[i], K0_NAMES[i])
    }

    pub fn matches(&self) -> bool {
        let (dim, k, kn, k0, k0n) = self.expected();
        (self.dim, self.k_dim, self.k0_dim) == (dim, k, k0) && self.k_name == kn && self.k0_name == k0n
    }
}

pub const K_NAMES: [&str; 8] = ["C", "H", "H", "H", "C", "R", "R", "R"];
pub const K0_NAMES: [&str; 8] = ["M2(R)", "M2(C)", "H", "H", "H", "C", "R", "R"];

fn classify_one(n: usize, variant: Variant) -> CliResult<ClassifyRow> {
    let m = assemble_euclidean(n, variant)?;
    let k = intertwiners(&m, false)?;
    let k0 = even_commutant_factor(&m)?;
    let even = intertwiners(&m, true)?;
    Ok(ClassifyRow {
        n,
        variant,
        dim: m.real_dim,
        k_dim: k.real_dimension,
        k_name: algebra_name(&k.basis),
        k0_dim: k0.real_dimension,
        k0_name: algebra_name(&k0.basis),
        even_commutant_dim: even.real_dimension,
    })
}

/// Rows for n = 1..=max_n, computed in parallel and returned in order.
pub fn classify_rows(max_n: usize) -> CliResult<Vec<ClassifyRow>> {
    if !(1..=16).contains(&max_n) {
        return Err(CliError::Input("max-n must be between 1 and 16".into()));
    }
    let jobs: Vec<(usize, Variant)> = (1..=max_n)
        .flat_map(|n| {
            let minus = minus_allowed(Signature::euclidean(n));
            std::iter::once((n, Variant::Plus)).chain(minus.then_some((n, Variant::Minus)))
        })
        .collect();
    jobs.par_iter().map(|&(n, v)| classify_one(n, v)).collect()
}

pub fn render_classify(rows: &[ClassifyRow]) -> String {
    let mut out = String::from("n\tvariant\tdim\tK\tK0\teven-commutant\texpected(dim,K,K0)\tstatus\n");
    for r in rows {
        let (dim, k, kn, k0, k0n) = r.expected();
        out.push_str(&format!(
            "{}\t{}\t{}\t{} ({})\t{} ({})\t{}\t{dim},{kn} ({k}),{k0n} ({k0})\t{}\n",
            r.n,
            r.variant.as_str(),
            r.dim,
            r.k_name,
            r.k_dim,
            r.k0_name,
            r.k0_dim,
            r.even_commutant_dim,
            if r.matches() { "MATCH" } else { "MISMATCH" }
        ));
    }
    out
}
