use std::fs;
use std::path::Path;

use bvx_core::treewidth::TreeDecomposition;
use bvx_core::{Cost, CostVector, Graph, GraphBuilder, SiteList};

use crate::error::{CliError, CliResult};
use crate::formats::{self, GraphFile};

/// A validated Balanced Vertex instance.
#[derive(Debug, Clone)]
pub struct ProblemInstance {
    pub graph: Graph,
    pub costs: CostVector,
    pub sites: SiteList,
    pub td: Option<TreeDecomposition>,
    /// Per-vertex labels from `c` line comments.
    pub labels: Vec<Option<String>>,
}

pub fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

impl ProblemInstance {
    /// Builds an instance from a parsed graph file. `costs` and `sites`
    /// override what the file says.
    pub fn from_file(
        file: GraphFile,
        costs: Option<Vec<Option<Cost>>>,
        sites: Option<Vec<usize>>,
    ) -> CliResult<Self> {
        let mut b = GraphBuilder::new(file.n);
        for &(u, v, w) in &file.edges {
            match w {
                Some(w) => b.add_weighted_edge(u, v, w),
                None => b.add_edge(u, v),
            };
        }
        let graph = b.build()?;
        let per_vertex = costs.unwrap_or(file.costs);
        let costs = CostVector::new(
            per_vertex
                .into_iter()
                .map(|c| c.unwrap_or(Cost::from_units(1)))
                .collect(),
        )?;
        let sites = sites
            .or(file.sites)
            .ok_or_else(|| CliError::Input("no sites: add an s line or pass --sites".into()))?;
        if sites.is_empty() {
            return Err(CliError::Input("the site list is empty".into()));
        }
        let sites = SiteList::new(sites, graph.n())?;
        Ok(ProblemInstance {
            graph,
            costs,
            sites,
            td: None,
            labels: file.labels,
        })
    }

    /// Reads the graph file and the optional side files.
    pub fn load(
        graph: &Path,
        costs: Option<&Path>,
        sites: Option<&str>,
        td: Option<&Path>,
    ) -> CliResult<Self> {
        let name = graph.display().to_string();
        let file = formats::parse_graph(&read(graph)?, &name)?;
        let n = file.n;
        let costs = match costs {
            Some(p) => Some(formats::parse_costs(
                &read(p)?,
                &p.display().to_string(),
                n,
            )?),
            None => None,
        };
        let sites = sites.map(formats::parse_sites).transpose()?;
        let mut inst = Self::from_file(file, costs, sites)?;
        if let Some(p) = td {
            let td = formats::parse_td(&read(p)?, &p.display().to_string(), n)?;
            td.validate(&inst.graph)?;
            inst.td = Some(td);
        }
        Ok(inst)
    }

    pub fn from_text(text: &str) -> CliResult<Self> {
        Self::from_file(formats::parse_graph(text, "<input>")?, None, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_instance() {
        let inst = ProblemInstance::from_text("p 2 1\ne 0 1\ns 0\n").unwrap();
        assert_eq!(inst.graph.n(), 2);
        assert_eq!(inst.sites.as_slice(), &[0]);
        assert_eq!(inst.costs.total(), Cost::from_units(2));
    }

    #[test]
    fn rejections() {
        assert!(ProblemInstance::from_text("p 3 1\ne 0 1\ns 0\n").is_err());
        assert!(ProblemInstance::from_text("p 2 1\ne 0 1\n").is_err());
        assert!(ProblemInstance::from_text("p 2 1\ne 0 1\ns\n").is_err());
        assert!(ProblemInstance::from_text("p 2 2\ne 0 1\ne 1 0\ns 0\n").is_err());
        assert!(ProblemInstance::from_text("p 2 1\ne 0 1\nc 0 -2\ns 0\n").is_err());
    }
}
