//! Named objects loaded from text files.
//!
//! Files are sequences of blocks. A block starts with a header line
//! (`poset`, `lattice`, `prospace` or `support`) and runs until the next
//! header. `#` starts a comment. Blocks may only refer to blocks that appear
//! earlier, possibly in an earlier file.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use patchtop::{FinPoset, LevelSet, ProSpace, Rule, Sections, SetLattice, SupportDatum};

use crate::CliError;

/// A limit space together with the sections declared for it.
#[derive(Debug)]
pub struct ProEntry {
    pub space: Arc<ProSpace>,
    pub sections: Option<Sections>,
}

#[derive(Debug)]
pub struct SupportEntry {
    pub space: String,
    pub datum: SupportDatum,
}

#[derive(Debug, Default)]
pub struct Workspace {
    pub posets: BTreeMap<String, FinPoset>,
    pub lattices: BTreeMap<String, SetLattice>,
    pub prospaces: BTreeMap<String, ProEntry>,
    pub supports: BTreeMap<String, SupportEntry>,
}

struct Located<T> {
    line: usize,
    value: T,
}

enum GenDecl {
    Finite(Vec<String>),
    Level(usize, Vec<String>),
}

enum BuiltinSections {
    FixTop,
    NextPoint,
    Identity,
}

enum Block {
    Poset {
        name: String,
        elems: Vec<Located<String>>,
        les: Vec<Located<(String, String)>>,
    },
    Lattice {
        name: String,
        carrier: Vec<String>,
        gens: Vec<Located<Vec<String>>>,
    },
    Pro {
        name: String,
        rule: Option<Located<RuleDecl>>,
        levels: Vec<Located<(usize, String)>>,
        maps: Vec<Located<(usize, String, String)>>,
        sections: Vec<Located<(usize, String, String)>>,
        builtin: Option<Located<BuiltinSections>>,
    },
    Support {
        name: String,
        space: String,
        gens: Vec<Located<(String, GenDecl)>>,
        chromatic: Option<usize>,
    },
}

enum RuleDecl {
    ChainGrowth,
    Constant(String),
    Table,
}

struct Parser<'a> {
    file: &'a str,
    depth: usize,
}

impl Parser<'_> {
    fn err(&self, line: usize, message: impl Into<String>) -> CliError {
        CliError::Parse {
            file: self.file.to_string(),
            line,
            message: message.into(),
        }
    }

    fn core(&self, line: usize, e: patchtop::Error) -> CliError {
        self.err(line, e.to_string())
    }
}

fn parse_usize(p: &Parser, line: usize, s: &str) -> Result<usize, CliError> {
    s.parse()
        .map_err(|_| p.err(line, format!("expected a level number, found `{s}`")))
}

fn parse_arrow(p: &Parser, line: usize, s: &str) -> Result<(String, String), CliError> {
    s.split_once("->")
        .map(|(a, b)| (a.trim().to_string(), b.trim().to_string()))
        .filter(|(a, b)| !a.is_empty() && !b.is_empty())
        .ok_or_else(|| p.err(line, format!("expected `a->b`, found `{s}`")))
}

impl Workspace {
    /// Loads every file in order into one workspace.
    pub fn load<P: AsRef<Path>>(paths: &[P], depth: usize) -> Result<Self, CliError> {
        let mut ws = Workspace::default();
        for path in paths {
            let path = path.as_ref();
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
            ws.parse_str(&text, &path.display().to_string(), depth)?;
        }
        Ok(ws)
    }

    pub fn parse_str(&mut self, text: &str, file: &str, depth: usize) -> Result<(), CliError> {
        let p = Parser { file, depth };
        let mut block: Option<Located<Block>> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let words: Vec<&str> = content.split_whitespace().collect();
            let header = match words[0] {
                "poset" | "lattice" | "prospace" => {
                    let [_, name] = words[..] else {
                        return Err(p.err(line, format!("expected `{} <name>`", words[0])));
                    };
                    Some(match words[0] {
                        "poset" => Block::Poset {
                            name: name.into(),
                            elems: Vec::new(),
                            les: Vec::new(),
                        },
                        "lattice" => Block::Lattice {
                            name: name.into(),
                            carrier: Vec::new(),
                            gens: Vec::new(),
                        },
                        _ => Block::Pro {
                            name: name.into(),
                            rule: None,
                            levels: Vec::new(),
                            maps: Vec::new(),
                            sections: Vec::new(),
                            builtin: None,
                        },
                    })
                }
                "support" => {
                    let [_, name, "on", space] = words[..] else {
                        return Err(p.err(line, "expected `support <name> on <space>`"));
                    };
                    Some(Block::Support {
                        name: name.into(),
                        space: space.into(),
                        gens: Vec::new(),
                        chromatic: None,
                    })
                }
                _ => None,
            };
            if let Some(h) = header {
                if let Some(done) = block.take() {
                    self.finish(&p, done)?;
                }
                block = Some(Located { line, value: h });
                continue;
            }
            let Some(current) = block.as_mut() else {
                return Err(p.err(line, format!("`{}` outside of a block", words[0])));
            };
            Self::body_line(&p, line, content, &words, &mut current.value)?;
        }
        if let Some(done) = block.take() {
            self.finish(&p, done)?;
        }
        Ok(())
    }

    fn body_line(p: &Parser, line: usize, content: &str, words: &[&str], block: &mut Block) -> Result<(), CliError> {
        let rest = content[words[0].len()..].trim();
        match (block, words[0]) {
            (Block::Poset { elems, .. }, "elem") => {
                elems.extend(words[1..].iter().map(|w| Located { line, value: w.to_string() }));
            }
            (Block::Poset { les, .. }, "le") => {
                let [_, a, b] = words[..] else {
                    return Err(p.err(line, "expected `le <a> <b>`"));
                };
                les.push(Located { line, value: (a.into(), b.into()) });
            }
            (Block::Lattice { carrier, .. }, "carrier") => {
                carrier.extend(words[1..].iter().map(|w| w.to_string()));
            }
            (Block::Lattice { gens, .. }, "gen") => {
                gens.push(Located {
                    line,
                    value: words[1..].iter().map(|w| w.to_string()).collect(),
                });
            }
            (Block::Pro { rule, .. }, "rule") => {
                if rule.is_some() {
                    return Err(p.err(line, "rule declared twice"));
                }
                let decl = match words[1..] {
                    ["chain-growth"] => RuleDecl::ChainGrowth,
                    ["constant", poset] => RuleDecl::Constant(poset.into()),
                    ["table"] => RuleDecl::Table,
                    _ => {
                        return Err(p.err(
                            line,
                            "expected `rule chain-growth`, `rule constant <poset>` or `rule table`",
                        ))
                    }
                };
                *rule = Some(Located { line, value: decl });
            }
            (Block::Pro { levels, .. }, "level") => {
                let [_, n, poset] = words[..] else {
                    return Err(p.err(line, "expected `level <n> <poset>`"));
                };
                levels.push(Located {
                    line,
                    value: (parse_usize(p, line, n)?, poset.into()),
                });
            }
            (Block::Pro { maps, sections, .. }, kind @ ("map" | "section")) => {
                let Some((n, arrow)) = rest.split_once(char::is_whitespace) else {
                    return Err(p.err(line, format!("expected `{kind} <n> <a>-><b>`")));
                };
                let n = parse_usize(p, line, n)?;
                let (a, b) = parse_arrow(p, line, arrow.trim())?;
                let target = if kind == "map" { maps } else { sections };
                target.push(Located { line, value: (n, a, b) });
            }
            (Block::Pro { builtin, .. }, "sections") => {
                let kind = match words[1..] {
                    ["fix-top"] => BuiltinSections::FixTop,
                    ["next-point"] => BuiltinSections::NextPoint,
                    ["identity"] => BuiltinSections::Identity,
                    _ => return Err(p.err(line, "expected `sections fix-top|next-point|identity`")),
                };
                *builtin = Some(Located { line, value: kind });
            }
            (Block::Support { gens, .. }, "gen") => {
                let Some((label, set)) = rest.split_once('=') else {
                    return Err(p.err(line, "expected `gen <label> = <elements>`"));
                };
                let label = label.trim();
                if label.is_empty() || label.contains(char::is_whitespace) {
                    return Err(p.err(line, "generator labels are single words"));
                }
                let set = set.trim();
                let decl = match set.strip_prefix("level") {
                    Some(tail) if tail.starts_with(char::is_whitespace) => {
                        let Some((n, elems)) = tail.split_once(':') else {
                            return Err(p.err(line, "expected `level <n> : <elements>`"));
                        };
                        GenDecl::Level(
                            parse_usize(p, line, n.trim())?,
                            elems.split_whitespace().map(String::from).collect(),
                        )
                    }
                    _ => GenDecl::Finite(set.split_whitespace().map(String::from).collect()),
                };
                gens.push(Located { line, value: (label.to_string(), decl) });
            }
            (Block::Support { chromatic, .. }, "gens") => {
                if words[1..] != ["chromatic"] {
                    return Err(p.err(line, "expected `gens chromatic`"));
                }
                *chromatic = Some(line);
            }
            (_, other) => return Err(p.err(line, format!("unexpected `{other}` in this block"))),
        }
        Ok(())
    }

    fn finish(&mut self, p: &Parser, block: Located<Block>) -> Result<(), CliError> {
        let header = block.line;
        match block.value {
            Block::Poset { name, elems, les } => {
                if self.posets.contains_key(&name) {
                    return Err(p.err(header, format!("poset `{name}` defined twice")));
                }
                let ids: Vec<String> = elems.iter().map(|e| e.value.clone()).collect();
                for (i, e) in elems.iter().enumerate() {
                    if ids[..i].contains(&e.value) {
                        return Err(p.err(e.line, format!("duplicate element `{}`", e.value)));
                    }
                }
                let mut pairs = Vec::with_capacity(les.len());
                for le in &les {
                    let find = |x: &str| {
                        ids.iter()
                            .position(|i| i == x)
                            .ok_or_else(|| p.err(le.line, format!("unknown element `{x}`")))
                    };
                    pairs.push((find(&le.value.0)?, find(&le.value.1)?));
                }
                let poset = FinPoset::from_relation(ids, &pairs).map_err(|e| p.core(header, e))?;
                self.posets.insert(name, poset);
            }
            Block::Lattice { name, carrier, gens } => {
                if self.lattices.contains_key(&name) {
                    return Err(p.err(header, format!("lattice `{name}` defined twice")));
                }
                let mut subsets = Vec::new();
                for g in &gens {
                    let mut s = patchtop::Subset::empty(carrier.len());
                    for m in &g.value {
                        let x = carrier
                            .iter()
                            .position(|c| c == m)
                            .ok_or_else(|| p.err(g.line, format!("`{m}` is not in the carrier")))?;
                        s.insert(x);
                    }
                    subsets.push(s);
                }
                let lattice = SetLattice::generate(carrier, &subsets).map_err(|e| p.core(header, e))?;
                self.lattices.insert(name, lattice);
            }
            Block::Pro {
                name,
                rule,
                levels,
                maps,
                sections,
                builtin,
            } => {
                if self.prospaces.contains_key(&name) {
                    return Err(p.err(header, format!("prospace `{name}` defined twice")));
                }
                let entry = self.build_prospace(p, header, rule, levels, maps, sections, builtin)?;
                self.prospaces.insert(name, entry);
            }
            Block::Support {
                name,
                space,
                gens,
                chromatic,
            } => {
                if self.supports.contains_key(&name) {
                    return Err(p.err(header, format!("support `{name}` defined twice")));
                }
                let datum = self.build_support(p, header, &space, gens, chromatic)?;
                self.supports.insert(name, SupportEntry { space, datum });
            }
        }
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn build_prospace(
        &self,
        p: &Parser,
        header: usize,
        rule: Option<Located<RuleDecl>>,
        levels: Vec<Located<(usize, String)>>,
        maps: Vec<Located<(usize, String, String)>>,
        sections: Vec<Located<(usize, String, String)>>,
        builtin: Option<Located<BuiltinSections>>,
    ) -> Result<ProEntry, CliError> {
        let rule = rule.ok_or_else(|| p.err(header, "prospace without a `rule` line"))?;
        let is_table = matches!(rule.value, RuleDecl::Table);
        if !is_table {
            if let Some(l) = levels.first().map(|l| l.line).or(maps.first().map(|m| m.line)) {
                return Err(p.err(l, "`level` and `map` lines need `rule table`"));
            }
        }
        let rule_value = match rule.value {
            RuleDecl::ChainGrowth => Rule::ChainGrowth,
            RuleDecl::Constant(poset) => Rule::Constant(
                self.posets
                    .get(&poset)
                    .cloned()
                    .ok_or_else(|| p.err(rule.line, format!("unknown poset `{poset}`")))?,
            ),
            RuleDecl::Table => {
                let mut by_level: BTreeMap<usize, (FinPoset, usize)> = BTreeMap::new();
                for l in &levels {
                    let (n, poset) = &l.value;
                    let x = self
                        .posets
                        .get(poset)
                        .ok_or_else(|| p.err(l.line, format!("unknown poset `{poset}`")))?;
                    if by_level.insert(*n, (x.clone(), l.line)).is_some() {
                        return Err(p.err(l.line, format!("level {n} declared twice")));
                    }
                }
                if by_level.is_empty() {
                    return Err(p.err(header, "a table needs at least one `level` line"));
                }
                for (i, (&n, (_, line))) in by_level.iter().enumerate() {
                    if i != n {
                        return Err(p.err(*line, format!("level {n} declared but level {i} is missing")));
                    }
                }
                let posets: Vec<FinPoset> = by_level.into_values().map(|(x, _)| x).collect();
                let mut transitions: Vec<Vec<Option<usize>>> =
                    (1..posets.len()).map(|n| vec![None; posets[n].len()]).collect();
                for m in &maps {
                    let (n, a, b) = &m.value;
                    if *n + 1 >= posets.len() {
                        return Err(p.err(m.line, format!("map {n} needs levels {n} and {}", n + 1)));
                    }
                    let a_ix = posets[n + 1].index_of(a).map_err(|e| p.core(m.line, e))?;
                    let b_ix = posets[*n].index_of(b).map_err(|e| p.core(m.line, e))?;
                    if transitions[*n][a_ix].replace(b_ix).is_some() {
                        return Err(p.err(m.line, format!("`{a}` mapped twice by map {n}")));
                    }
                }
                let mut complete = Vec::new();
                for (n, t) in transitions.into_iter().enumerate() {
                    let row = t
                        .iter()
                        .enumerate()
                        .map(|(a, b)| {
                            b.ok_or_else(|| {
                                p.err(header, format!("map {n} leaves `{}` unmapped", posets[n + 1].id(a)))
                            })
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    complete.push(row);
                }
                Rule::Table {
                    levels: posets,
                    transitions: complete,
                }
            }
        };
        let space = ProSpace::new(rule_value, p.depth).map_err(|e| p.core(header, e))?;

        let sections = match (builtin, sections.is_empty()) {
            (Some(b), true) => Some(match b.value {
                BuiltinSections::FixTop => Sections::FixTop,
                BuiltinSections::NextPoint => Sections::NextPoint,
                BuiltinSections::Identity => Sections::Identity,
            }),
            (Some(b), false) => {
                return Err(p.err(b.line, "use either `sections` or `section` lines, not both"));
            }
            (None, true) => None,
            (None, false) => {
                let top = sections.iter().map(|s| s.value.0).max().expect("non-empty");
                let mut rows: Vec<Vec<Option<usize>>> = Vec::new();
                for n in 0..=top {
                    let size = space.level(n).map_err(|e| p.core(header, e))?.len();
                    rows.push(vec![None; size]);
                }
                for s in &sections {
                    let (n, a, b) = &s.value;
                    let lower = space.level(*n).map_err(|e| p.core(s.line, e))?;
                    let upper = space.level(n + 1).map_err(|e| p.core(s.line, e))?;
                    let a_ix = lower.index_of(a).map_err(|e| p.core(s.line, e))?;
                    let b_ix = upper.index_of(b).map_err(|e| p.core(s.line, e))?;
                    if rows[*n][a_ix].replace(b_ix).is_some() {
                        return Err(p.err(s.line, format!("`{a}` sent twice by section {n}")));
                    }
                }
                let mut maps = Vec::new();
                for (n, row) in rows.into_iter().enumerate() {
                    let lower = space.level(n).map_err(|e| p.core(header, e))?;
                    maps.push(
                        row.iter()
                            .enumerate()
                            .map(|(a, b)| {
                                b.ok_or_else(|| {
                                    p.err(header, format!("section {n} leaves `{}` unmapped", lower.id(a)))
                                })
                            })
                            .collect::<Result<Vec<_>, _>>()?,
                    );
                }
                Some(Sections::Table(maps))
            }
        };
        Ok(ProEntry {
            space: Arc::new(space),
            sections,
        })
    }

    fn build_support(
        &self,
        p: &Parser,
        header: usize,
        space: &str,
        gens: Vec<Located<(String, GenDecl)>>,
        chromatic: Option<usize>,
    ) -> Result<SupportDatum, CliError> {
        match (self.posets.get(space), self.prospaces.get(space)) {
            (Some(_), Some(_)) => Err(p.err(header, format!("`{space}` names both a poset and a prospace"))),
            (None, None) => Err(p.err(header, format!("unknown space `{space}`"))),
            (Some(x), None) => {
                if let Some(line) = chromatic {
                    return Err(p.err(line, "`gens chromatic` needs a chain-growth prospace"));
                }
                let mut assigned = Vec::new();
                for g in gens {
                    let (label, decl) = g.value;
                    let GenDecl::Finite(elems) = decl else {
                        return Err(p.err(g.line, "`level` supports need a prospace"));
                    };
                    let s = x.subset(&elems).map_err(|e| p.core(g.line, e))?;
                    if !x.is_closed(&s) {
                        return Err(p.err(g.line, format!("support of `{label}` is not Thomason")));
                    }
                    assigned.push((label, s));
                }
                SupportDatum::finite(x.clone(), assigned).map_err(|e| p.core(header, e))
            }
            (None, Some(entry)) => {
                let pro = &entry.space;
                if let Some(line) = chromatic {
                    if !gens.is_empty() {
                        return Err(p.err(line, "`gens chromatic` replaces all `gen` lines"));
                    }
                    return SupportDatum::chromatic(Arc::clone(pro), pro.max_level()).map_err(|e| p.core(line, e));
                }
                let mut assigned = Vec::new();
                for g in gens {
                    let (label, decl) = g.value;
                    let GenDecl::Level(n, elems) = decl else {
                        return Err(p.err(g.line, "supports on a prospace are written `level <n> : ...`"));
                    };
                    let c: LevelSet = pro.level_set(n, &elems).map_err(|e| p.core(g.line, e))?;
                    if !pro.is_thomason(&c).map_err(|e| p.core(g.line, e))? {
                        return Err(p.err(g.line, format!("support of `{label}` is not Thomason")));
                    }
                    assigned.push((label, c));
                }
                SupportDatum::pro(Arc::clone(pro), assigned).map_err(|e| p.core(header, e))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<Workspace, CliError> {
        let mut ws = Workspace::default();
        ws.parse_str(text, "test", 8)?;
        Ok(ws)
    }

    #[test]
    fn empty_file_gives_empty_workspace() {
        let ws = parse("# nothing here\n\n").unwrap();
        assert!(ws.posets.is_empty() && ws.lattices.is_empty());
        assert!(ws.prospaces.is_empty() && ws.supports.is_empty());
    }

    #[test]
    fn antisymmetry_is_a_load_error() {
        let err = parse("poset P\nelem a b\nle a b\nle b a\n").unwrap_err();
        assert!(err.to_string().contains("antisymmetry"), "{err}");
    }

    #[test]
    fn unknown_element_reports_its_line() {
        let err = parse("poset P\nelem a\nle a z\n").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn dangling_references_are_rejected() {
        assert!(parse("support d on nowhere\n").is_err());
        assert!(parse("prospace X\nrule constant nowhere\n").is_err());
    }

    #[test]
    fn table_prospace_and_support() {
        let ws = parse(
            "poset S\nelem 0 1\nle 0 1\n\
             prospace T\nrule table\nlevel 0 S\nlevel 1 S\nmap 0 0->0\nmap 0 1->1\n\
             section 0 0->0\nsection 0 1->1\n\
             support d on T\ngen g = level 0 : 1\n",
        )
        .unwrap();
        let t = &ws.prospaces["T"];
        assert_eq!(t.space.max_level(), 1);
        assert_eq!(t.sections, Some(Sections::Table(vec![vec![0, 1]])));
        assert_eq!(ws.supports["d"].datum.level(), 0);
    }

    #[test]
    fn missing_map_is_reported() {
        let err = parse("poset S\nelem 0 1\nle 0 1\nprospace T\nrule table\nlevel 0 S\nlevel 1 S\nmap 0 0->0\n")
            .unwrap_err();
        assert!(err.to_string().contains("unmapped"), "{err}");
    }

    #[test]
    fn non_thomason_support_is_rejected() {
        let err = parse("poset S\nelem 0 1\nle 0 1\nsupport d on S\ngen g = 0\n").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 5, .. }), "{err}");
    }

    #[test]
    fn bundled_chromatic_file_loads() {
        let ws = parse(include_str!("../data/chromatic.space")).unwrap();
        let c = &ws.prospaces["chromatic"];
        assert_eq!(c.space.max_level(), 8);
        let top = c.space.level(8).unwrap();
        assert_eq!(top.ids().first().map(String::as_str), Some("C1"));
        assert_eq!(top.ids().last().map(String::as_str), Some("Cinf"));
        assert_eq!(ws.supports["chrom"].datum.generators().count(), 9);
    }
}
