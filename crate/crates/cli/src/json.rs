//! Certificate JSON schema.

use serde::{Deserialize, Serialize};
use sgeo_core::{Certificate, GeodesicRecord, LayerLabeling, VertexPath};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeodesicJson {
    pub u: usize,
    pub v: usize,
    pub path: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoordJson {
    pub id: usize,
    pub i: usize,
    pub j: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateJson {
    pub graph: String,
    pub vertices: Vec<usize>,
    pub geodesics: Vec<GeodesicJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<CoordJson>>,
}

impl CertificateJson {
    /// Canonical form of `cert`; coordinates are attached when a labeling is known.
    pub fn new(graph: &str, cert: &Certificate, labeling: Option<&LayerLabeling>) -> Self {
        let mut cert = cert.clone();
        cert.canonicalize();
        let coords = labeling.map(|lab| {
            cert.vertices
                .iter()
                .map(|&id| {
                    let (i, j) = lab
                        .decode(id)
                        .expect("certificate vertex inside the product");
                    CoordJson { id, i, j }
                })
                .collect()
        });
        Self {
            graph: graph.to_string(),
            vertices: cert.vertices,
            geodesics: cert
                .geodesics
                .into_iter()
                .map(|r| GeodesicJson {
                    u: r.u,
                    v: r.v,
                    path: r.path.0,
                })
                .collect(),
            coords,
        }
    }

    pub fn to_certificate(&self) -> Certificate {
        Certificate {
            vertices: self.vertices.clone(),
            geodesics: self
                .geodesics
                .iter()
                .map(|g| GeodesicRecord {
                    u: g.u,
                    v: g.v,
                    path: VertexPath(g.path.clone()),
                })
                .collect(),
        }
    }

    /// Accepts a bare certificate or a `solve` result wrapping one.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let value: serde_json::Value = serde_json::from_str(text)
            .map_err(|e| CliError::Usage(format!("malformed certificate JSON: {e}")))?;
        let inner = match value.get("certificate") {
            Some(c) if value.get("vertices").is_none() => c.clone(),
            _ => value,
        };
        serde_json::from_value(inner)
            .map_err(|e| CliError::Usage(format!("certificate does not match schema: {e}")))
    }

    pub fn to_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}
