//! Comparison against the fixture directory.

use std::collections::BTreeSet;
use std::path::Path;

use compcs_core::composites::EntConfig;
use compcs_core::composites::enumerate_composites;
use compcs_core::names::{build_test_set, equiv_orbit, realised_names, Name};
use compcs_core::search::Mode;

use crate::io;
use crate::pipeline::{self, build_graph, cliques, ent_image, indices_of, name_set};

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, pass: bool, detail: String) -> Check {
        Check { name: name.into(), pass, detail }
    }

    pub fn line(&self) -> String {
        format!("{} {}: {}", if self.pass { "PASS" } else { "FAIL" }, self.name, self.detail)
    }
}

fn count_check(name: &str, expected: usize, actual: usize) -> Check {
    Check::new(name, expected == actual, format!("expected {}, got {}", io::thousands(expected), io::thousands(actual)))
}

fn set_of(names: &[Name]) -> BTreeSet<Name> {
    names.iter().cloned().collect()
}

/// Every fixture check; the fixtures are only read.
pub fn verify(dir: &Path) -> Result<Vec<Check>, String> {
    let p2 = io::read_names(&dir.join("p2.json"))?;
    let sets2 = io::read_name_sets(&dir.join("sets2.json"))?;
    let counts = io::read_counts(&dir.join("counts.json"))?;
    let examples = io::read_examples(&dir.join("examples3.json"))?;
    let eg090 = io::read_names(&dir.join("eg090.json"))?;
    let eg_ent1 = io::read_names(&dir.join("eg090_ent1.json"))?;
    let eg_ent21 = io::read_names(&dir.join("eg090_ent2_ent1.json"))?;
    let mut out = Vec::new();

    let t2 = build_test_set(2);
    let ours: BTreeSet<Name> = t2.generators.entangled.iter().filter(|g| g.passes).map(|g| g.name.clone()).collect();
    let theirs = set_of(&p2);
    let shared = ours.intersection(&theirs).count();
    out.push(Check::new(
        "P2 listing",
        ours == theirs,
        format!("{} fixture names, {} passing representatives, {} shared", theirs.len(), ours.len(), shared),
    ));
    out.push(count_check("P2 size", counts.p2, ours.len()));
    let realised: BTreeSet<Name> = realised_names(&enumerate_composites(2)).into_keys().collect();
    let closure: BTreeSet<Name> = p2.iter().flat_map(equiv_orbit).filter(|n| realised.contains(n)).collect();
    let passing: BTreeSet<Name> = t2.names.intersection(&realised).cloned().collect();
    out.push(Check::new(
        "P2 closure",
        closure == passing,
        format!("{} realised names in the closure, {} realised names in the membership set", closure.len(), passing.len()),
    ));
    out.push(count_check("entangled generators N=2", counts.gen2, t2.generators.entangled.len()));

    let g2 = build_graph(2, Mode::Semantic);
    let c2 = cliques(&g2);
    let complete2: BTreeSet<BTreeSet<Name>> =
        c2.iter().filter(|c| c.members.len() == 5).map(|c| name_set(&g2, &c.members)).collect();
    let fixture2: BTreeSet<BTreeSet<Name>> = sets2.iter().map(|s| set_of(s)).collect();
    out.push(count_check("complete sets N=2", counts.sets2, complete2.len()));
    out.push(Check::new(
        "two-qubit set listing",
        complete2 == fixture2,
        format!("{} of {} fixture sets found", fixture2.intersection(&complete2).count(), fixture2.len()),
    ));

    let t3 = build_test_set(3);
    out.push(count_check("entangled generators N=3", counts.gen3, t3.generators.entangled.len()));
    out.push(count_check("passing generators N=3", counts.pass3, t3.generators.passing()));

    let g3 = build_graph(3, Mode::Semantic);
    let c3 = cliques(&g3);
    let complete3 = c3.iter().filter(|c| c.members.len() == 9).count();
    out.push(count_check("complete sets N=3", counts.sets3, complete3));

    let maximal = |names: &[Name]| indices_of(&g3, names).filter(|ix| g3.is_maximal_clique(ix));
    for (config, members) in &examples {
        let ix = maximal(members);
        let got = ix.as_ref().map(|ix| pipeline::classify(&g3, ix));
        out.push(Check::new(
            &format!("example set {}", config),
            got == Some(*config),
            match got {
                Some(c) => format!("maximal clique with configuration {}", c),
                None => "not a maximal clique".into(),
            },
        ));
    }

    let mut ent_check = |label: &str, image: Result<Vec<Name>, String>, fixture: &[Name], config: EntConfig| {
        let check = match image {
            Err(e) => Check::new(label, false, e),
            Ok(image) => {
                let listed = set_of(&image) == set_of(fixture);
                let got = maximal(&image).map(|ix| pipeline::classify(&g3, &ix));
                Check::new(
                    label,
                    listed && got == Some(config),
                    format!(
                        "listing {}, {}",
                        if listed { "matches" } else { "differs" },
                        match got {
                            Some(c) => format!("maximal clique with configuration {}", c),
                            None => "not a maximal clique".into(),
                        }
                    ),
                )
            }
        };
        out.push(check);
    };
    let first = ent_image(&eg090, 0);
    ent_check("ent_1(eg090)", first.clone(), &eg_ent1, EntConfig { n_sc: 2, n_bs: 3, n_ns: 4 });
    let second = first.and_then(|f| ent_image(&f, 1));
    ent_check("ent_2 ent_1(eg090)", second, &eg_ent21, EntConfig { n_sc: 1, n_bs: 6, n_ns: 2 });

    Ok(out)
}
