//! Output bundles: the artifacts of one `generate` plus a manifest of their
//! digests.

use std::fmt;
use std::path::Path;

use anyhow::Context;
use ocycle_core::builders::{OcycleCertificate, Provenance};
use ocycle_core::compress;
use ocycle_core::format::{write_ocycle, write_sts, write_ucycle};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::routes::Route;

pub const STS_FILE: &str = "sts.txt";
pub const OCYCLE_FILE: &str = "ocycle.txt";
pub const UCYCLE_FILE: &str = "ucycle.txt";
pub const PROVENANCE_FILE: &str = "provenance.json";
pub const MANIFEST_FILE: &str = "manifest.json";

#[derive(Serialize)]
struct ProvenanceFile<'a> {
    tree: String,
    depth: usize,
    root: &'a Provenance,
}

#[derive(Serialize)]
struct Artifact {
    path: String,
    sha256: String,
    bytes: usize,
}

/// Everything needed to rerun a `generate` and check its outputs. Holds no
/// timestamps, so reruns are byte-identical.
#[derive(Serialize)]
struct Manifest<'a> {
    tool: &'static str,
    version: &'static str,
    command: &'static str,
    parameters: Parameters,
    #[serde(skip_serializing_if = "Option::is_none")]
    data_dir: Option<String>,
    certificate: &'a Summary,
    artifacts: Vec<Artifact>,
}

#[derive(Serialize)]
struct Parameters {
    order: u32,
    route: Route,
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub order: u32,
    pub blocks: usize,
    pub route: String,
    pub tree: String,
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "v={} b={} route={} tree: {}",
            self.order, self.blocks, self.route, self.tree
        )
    }
}

fn sha256(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn write(dir: &Path, route: Route, cert: &OcycleCertificate, data_dir: Option<&Path>) -> anyhow::Result<Summary> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let n = cert.order();
    let cycle = cert.cycle.canonical_rotation();
    let provenance = ProvenanceFile {
        tree: cert.provenance.tree(),
        depth: cert.provenance.depth(),
        root: &cert.provenance,
    };
    let files = [
        (STS_FILE, write_sts(&cert.ts)),
        (OCYCLE_FILE, write_ocycle(n, cycle.blocks())),
        (UCYCLE_FILE, write_ucycle(n, &compress(&cycle))),
        (PROVENANCE_FILE, serde_json::to_string_pretty(&provenance)? + "\n"),
    ];
    let mut artifacts = Vec::new();
    for (name, text) in &files {
        let path = dir.join(name);
        std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
        artifacts.push(Artifact {
            path: name.to_string(),
            sha256: sha256(text.as_bytes()),
            bytes: text.len(),
        });
    }
    let summary = Summary {
        order: n,
        blocks: cert.block_count(),
        route: route.to_string(),
        tree: provenance.tree.clone(),
    };
    let manifest = Manifest {
        tool: env!("CARGO_PKG_NAME"),
        version: env!("CARGO_PKG_VERSION"),
        command: "generate",
        parameters: Parameters { order: n, route },
        data_dir: data_dir.map(|p| p.display().to_string()),
        certificate: &summary,
        artifacts,
    };
    let path = dir.join(MANIFEST_FILE);
    std::fs::write(&path, serde_json::to_string_pretty(&manifest)? + "\n")
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(summary)
}
