//! Command-line front end: decode words into graphs, encode graphs into
//! words, verify roundtrips, survey the atlas, and list the language
//! catalog.
//!
//! Exit codes are stable API: 0 success, 2 input syntax, 3 oracle misuse,
//! 4 class violation, 5 resource bound, 6 roundtrip failure, 7 atlas
//! counterexample.

use std::collections::{BTreeSet, VecDeque};
use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use wordgraph::atlas::{enumerate_class, verify_class};
use wordgraph::codec::{
    decode, encode_bipartite_lyndon, encode_bipartite_palindrome, encode_cluster, encode_copy,
    encode_detp, encode_dyck, encode_interval_union, encode_lyndon, encode_mod_scheme,
    encode_palindrome, encode_sparse, report_size, ModHost,
};
use wordgraph::files;
use wordgraph::graphs::{
    find_structure, interval_model_of_complement, is_isomorphic, parse_class, validate_witness,
    ClassWitness, Graph, GraphClass, HostGraph,
};
use wordgraph::languages::{catalog_entries, make_oracle, LanguageOracle, LanguageSpec};
use wordgraph::words::{Letter, Word};
use wordgraph::Error;

#[derive(Parser)]
#[command(name = "wordgraph", version, about = "Decode graphs from words and encode them back")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decode a word into the graph it represents under a language.
    Decode {
        /// Language spec, e.g. `pal` or `or(lyndon-odd,parity-odd)`.
        #[arg(long)]
        lang: String,
        /// Word file path, or `-` for stdin.
        #[arg(long)]
        word: String,
        /// Read the word as one contiguous string of single-character letters.
        #[arg(long)]
        compact: bool,
    },
    /// Encode a graph file into a word representing it.
    Encode {
        /// Scheme id: palindrome, detp, copy, sparse, lyndon, dyck, bip-pal,
        /// bip-lyndon, mod:<k>, hgraph:<file>, cluster, or interval-union.
        #[arg(long)]
        scheme: String,
        /// Graph file path.
        #[arg(long)]
        graph: String,
        /// Witness file (order, bipartition, coloring, or partition);
        /// computed by brute force when absent.
        #[arg(long)]
        aux: Option<String>,
    },
    /// Encode, decode back, and isomorphism-check; prints OK or FAIL.
    Verify {
        #[arg(long)]
        scheme: String,
        #[arg(long)]
        graph: String,
        #[arg(long)]
        aux: Option<String>,
    },
    /// Survey decodable graphs, optionally checking a language/class theorem.
    Atlas {
        #[arg(long)]
        lang: String,
        /// Graph class id such as `cluster` or `k-colorable:2`; without it
        /// the survey only lists what decodes.
        #[arg(long)]
        class: Option<String>,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 10)]
        max_len: usize,
        /// Emit the tab-separated report instead of the summary.
        #[arg(long)]
        tsv: bool,
    },
    /// Print the language catalog.
    ListLangs,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

// Default mapping for errors out of parsers and bounded searches. The
// asymmetric-oracle and class-violation cases carry exit codes 3 and 4 and
// are mapped at their call sites, where the context is known.
impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::ResourceLimit(_) => 5,
            _ => 2,
        };
        Failure::new(code, e.to_string())
    }
}

fn main() -> ExitCode {
    // Rust ignores SIGPIPE by default, so `wordgraph list-langs | head`
    // would panic mid-print; restore the usual terminate-on-SIGPIPE.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match dispatch(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Decode {
            lang,
            word,
            compact,
        } => cmd_decode(&lang, &word, compact),
        Command::Encode { scheme, graph, aux } => cmd_encode(&scheme, &graph, aux.as_deref()),
        Command::Verify { scheme, graph, aux } => cmd_verify(&scheme, &graph, aux.as_deref()),
        Command::Atlas {
            lang,
            class,
            max_n,
            max_len,
            tsv,
        } => cmd_atlas(&lang, class.as_deref(), max_n, max_len, tsv),
        Command::ListLangs => cmd_list_langs(),
    }
}

fn read_file(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new(2, format!("cannot read {path}: {e}")))
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::new(2, format!("cannot read stdin: {e}")))?;
        Ok(text)
    } else {
        read_file(path)
    }
}

fn cmd_decode(lang: &str, word: &str, compact: bool) -> Result<(), Failure> {
    let l = make_oracle(lang)?;
    let text = read_input(word)?;
    let w = files::parse_word(&text, compact)?;
    let g = decode(&l, &w).map_err(|e| Failure::new(3, e.to_string()))?;
    print!("{}", files::serialize_graph(&g));
    Ok(())
}

fn cmd_encode(scheme: &str, graph: &str, aux: Option<&str>) -> Result<(), Failure> {
    let scheme = Scheme::parse(scheme)?;
    let g = files::parse_graph(&read_file(graph)?)?;
    let w = scheme.encode(&g, aux)?;
    let report = report_size(&w).map_err(Failure::from)?;
    println!("{}", render_word(&w));
    eprintln!("{report}");
    Ok(())
}

fn cmd_verify(scheme: &str, graph: &str, aux: Option<&str>) -> Result<(), Failure> {
    let scheme = Scheme::parse(scheme)?;
    let g = files::parse_graph(&read_file(graph)?)?;
    let w = scheme.encode(&g, aux)?;
    for l in scheme.oracles()? {
        let back = decode(&l, &w).map_err(|e| Failure::new(3, e.to_string()))?;
        if !is_isomorphic(&back, &g).map_err(Failure::from)? {
            println!("FAIL");
            return Err(Failure::new(
                6,
                format!("decoding under {} does not give the input back", l.id()),
            ));
        }
    }
    println!("OK");
    Ok(())
}

fn cmd_atlas(
    lang: &str,
    class: Option<&str>,
    max_n: usize,
    max_len: usize,
    tsv: bool,
) -> Result<(), Failure> {
    if max_n == 0 || max_len == 0 {
        return Err(Failure::new(2, "atlas bounds must be at least 1"));
    }
    let l = make_oracle(lang)?;
    let report = match class {
        Some(text) => {
            let class = parse_class(text, &mut |path| {
                let content = fs::read_to_string(path)
                    .map_err(|e| Error::InputFormat(format!("cannot read host file {path}: {e}")))?;
                files::parse_host_graph(&content)
            })?;
            verify_class(&l, &class, max_n, max_len)
        }
        None => enumerate_class(&l, max_n, max_len),
    }
    .map_err(|e| match e {
        Error::ResourceLimit(_) => Failure::new(5, e.to_string()),
        Error::InvalidArguments(_) => Failure::new(3, e.to_string()),
        other => Failure::from(other),
    })?;
    if tsv {
        print!("{}", report.tsv());
    } else {
        println!("{}", report.summary());
    }
    if report.is_clean() {
        Ok(())
    } else {
        Err(Failure::new(
            7,
            format!("{} counterexample(s) found", report.counterexamples.len()),
        ))
    }
}

fn cmd_list_langs() -> Result<(), Failure> {
    println!("{:<24} {:<11} description", "language", "rev-closed");
    for e in catalog_entries() {
        let name = match e.parameter {
            Some(p) => format!("{}:<{}>", e.name, p),
            None => e.name.to_string(),
        };
        println!("{:<24} {:<11} {}", name, e.reversal_closed, e.summary);
    }
    println!();
    println!("Combinators: not(L), and(L1,L2,...), or(L1,L2,...), hull(L), rev(L).");
    println!("Every catalog language is 0-1-symmetric, so all specs decode.");
    Ok(())
}

/// One line, compact when every letter is a single character.
fn render_word(w: &Word) -> String {
    files::serialize_word(w, true).unwrap_or_else(|_| w.to_string())
}

enum Scheme {
    Palindrome,
    Detp,
    Copy,
    Sparse,
    Lyndon,
    Dyck,
    BipPal,
    BipLyndon,
    Mod(u32),
    HGraph { source: String, host: HostGraph },
    Cluster,
    IntervalUnion,
}

impl Scheme {
    fn parse(text: &str) -> Result<Scheme, Failure> {
        Ok(match text {
            "palindrome" => Scheme::Palindrome,
            "detp" => Scheme::Detp,
            "copy" => Scheme::Copy,
            "sparse" => Scheme::Sparse,
            "lyndon" => Scheme::Lyndon,
            "dyck" => Scheme::Dyck,
            "bip-pal" => Scheme::BipPal,
            "bip-lyndon" => Scheme::BipLyndon,
            "cluster" => Scheme::Cluster,
            "interval-union" => Scheme::IntervalUnion,
            _ => {
                if let Some(arg) = text.strip_prefix("mod:") {
                    let k: u32 = arg
                        .parse()
                        .map_err(|_| Failure::new(2, format!("bad modulus {arg:?}")))?;
                    if k == 0 {
                        return Err(Failure::new(2, "mod scheme needs k >= 1"));
                    }
                    Scheme::Mod(k)
                } else if let Some(path) = text.strip_prefix("hgraph:") {
                    let host = files::parse_host_graph(&read_file(path)?)?;
                    Scheme::HGraph {
                        source: path.to_string(),
                        host,
                    }
                } else {
                    return Err(Failure::new(2, format!("unknown scheme {text:?}")));
                }
            }
        })
    }

    fn takes_witness(&self) -> bool {
        matches!(
            self,
            Scheme::Dyck
                | Scheme::BipPal
                | Scheme::BipLyndon
                | Scheme::Mod(_)
                | Scheme::HGraph { .. }
                | Scheme::Cluster
        )
    }

    fn encode(&self, g: &Graph, aux: Option<&str>) -> Result<Word, Failure> {
        if aux.is_some() && !self.takes_witness() {
            return Err(Failure::new(
                2,
                "this scheme does not take a witness file".to_string(),
            ));
        }
        let aux = match aux {
            Some(path) => Some(read_file(path)?),
            None => None,
        };
        let aux = aux.as_deref();
        Ok(match self {
            Scheme::Palindrome => encode_palindrome(g),
            Scheme::Detp => encode_detp(g),
            Scheme::Copy => encode_copy(g),
            Scheme::Sparse => encode_sparse(g),
            Scheme::Lyndon => encode_lyndon(g),
            Scheme::Dyck => {
                let supplied = parse_aux(aux, files::parse_order, ClassWitness::Order)?;
                match structure_for(g, &GraphClass::Comparability, supplied)? {
                    ClassWitness::Order(order) => {
                        encode_dyck(g, &order).map_err(class_violation)?
                    }
                    _ => unreachable!(),
                }
            }
            Scheme::BipPal | Scheme::BipLyndon => {
                let supplied = parse_aux(aux, files::parse_bipartition, |(a, b)| {
                    ClassWitness::Bipartition { a, b }
                })?;
                match structure_for(g, &GraphClass::Bipartite, supplied)? {
                    ClassWitness::Bipartition { a, b } => {
                        let encode = if matches!(self, Scheme::BipPal) {
                            encode_bipartite_palindrome
                        } else {
                            encode_bipartite_lyndon
                        };
                        encode(g, &a, &b).map_err(class_violation)?
                    }
                    _ => unreachable!(),
                }
            }
            Scheme::Mod(k) => {
                let supplied = parse_aux(aux, files::parse_coloring, ClassWitness::Coloring)?;
                match structure_for(g, &GraphClass::KColorable(*k), supplied)? {
                    ClassWitness::Coloring(f) => {
                        encode_mod_scheme(g, &ModHost::Clique(*k), &f).map_err(class_violation)?
                    }
                    _ => unreachable!(),
                }
            }
            Scheme::HGraph { source, host } => {
                let supplied = parse_aux(aux, files::parse_coloring, ClassWitness::Homomorphism)?;
                let class = GraphClass::HColorable {
                    source: source.clone(),
                    host: host.clone(),
                };
                match structure_for(g, &class, supplied)? {
                    ClassWitness::Homomorphism(f) => {
                        encode_mod_scheme(g, &ModHost::Host(host.clone()), &f)
                            .map_err(class_violation)?
                    }
                    _ => unreachable!(),
                }
            }
            Scheme::Cluster => {
                let supplied = parse_aux(aux, files::parse_partition, ClassWitness::Partition)?;
                match structure_for(g, &GraphClass::Cluster, supplied)? {
                    ClassWitness::Partition(parts) => {
                        encode_cluster(g, &parts).map_err(class_violation)?
                    }
                    _ => unreachable!(),
                }
            }
            Scheme::IntervalUnion => {
                let mut families = Vec::new();
                for comp in components(g) {
                    let sub = induced(g, &comp);
                    let model = interval_model_of_complement(&sub).map_err(|e| match e {
                        Error::ResourceLimit(_) => Failure::new(5, e.to_string()),
                        other => Failure::from(other),
                    })?;
                    match model {
                        Some(model) => families.push(model),
                        None => {
                            return Err(Failure::new(
                                4,
                                format!(
                                    "the component containing {} is not a co-interval graph",
                                    comp[0]
                                ),
                            ))
                        }
                    }
                }
                encode_interval_union(&families).map_err(class_violation)?
            }
        })
    }

    /// The languages a verify run decodes under. Cluster words must decode
    /// correctly under balanced and nested alike.
    fn oracles(&self) -> Result<Vec<LanguageOracle>, Failure> {
        let ids: &[&str] = match self {
            Scheme::Palindrome => &["pal"],
            Scheme::Detp => &["detp"],
            Scheme::Copy => &["copy"],
            Scheme::Sparse => &["not(copy)"],
            Scheme::Lyndon => &["lyndon"],
            Scheme::Dyck => &["dyck"],
            Scheme::BipPal => &["and(pal,classical)"],
            Scheme::BipLyndon => &["lyndon-odd"],
            Scheme::Mod(k) => return Ok(vec![make_oracle(&format!("copy-mod:{k}"))?]),
            Scheme::HGraph { source, host } => {
                return Ok(vec![LanguageOracle::from_spec(LanguageSpec::HGraph {
                    source: source.clone(),
                    host: host.clone(),
                })])
            }
            Scheme::Cluster => &["balanced", "nested"],
            Scheme::IntervalUnion => &["nested"],
        };
        ids.iter()
            .map(|id| make_oracle(id).map_err(Failure::from))
            .collect()
    }
}

fn parse_aux<T>(
    aux: Option<&str>,
    parse: impl Fn(&str) -> wordgraph::Result<T>,
    wrap: impl Fn(T) -> ClassWitness,
) -> Result<Option<ClassWitness>, Failure> {
    aux.map(|text| parse(text).map(&wrap).map_err(Failure::from))
        .transpose()
}

/// Validates a supplied witness or searches for one; a graph outside the
/// class is a violation, a blown search bound a resource failure.
fn structure_for(
    g: &Graph,
    class: &GraphClass,
    supplied: Option<ClassWitness>,
) -> Result<ClassWitness, Failure> {
    if let Some(w) = supplied {
        if !validate_witness(g, class, &w) {
            return Err(Failure::new(
                4,
                format!("witness does not establish that the graph is {class}"),
            ));
        }
        return Ok(w);
    }
    match find_structure(g, class) {
        Ok(Some(w)) => Ok(w),
        Ok(None) => Err(Failure::new(4, format!("graph is not {class}"))),
        Err(e @ Error::ResourceLimit(_)) => Err(Failure::new(5, e.to_string())),
        Err(e) => Err(Failure::from(e)),
    }
}

fn class_violation(e: Error) -> Failure {
    Failure::new(4, e.to_string())
}

fn components(g: &Graph) -> Vec<Vec<Letter>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for v in g.vertices() {
        if seen.contains(v) {
            continue;
        }
        seen.insert(v.clone());
        let mut queue = VecDeque::from([v.clone()]);
        let mut comp = Vec::new();
        while let Some(u) = queue.pop_front() {
            comp.push(u.clone());
            for nb in g.neighbors(&u) {
                if seen.insert(nb.clone()) {
                    queue.push_back(nb);
                }
            }
        }
        comp.sort();
        out.push(comp);
    }
    out
}

fn induced(g: &Graph, verts: &[Letter]) -> Graph {
    let inside: BTreeSet<&Letter> = verts.iter().collect();
    let edges: Vec<(Letter, Letter)> = g
        .edges()
        .iter()
        .filter(|(u, v)| inside.contains(u) && inside.contains(v))
        .cloned()
        .collect();
    Graph::new(verts.to_vec(), edges).expect("induced subgraph of a valid graph")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scheme_ids_parse() {
        assert!(Scheme::parse("palindrome").is_ok());
        assert!(Scheme::parse("mod:3").is_ok());
        assert!(matches!(Scheme::parse("mod:0"), Err(f) if f.code == 2));
        assert!(matches!(Scheme::parse("mod:x"), Err(f) if f.code == 2));
        assert!(matches!(Scheme::parse("nope"), Err(f) if f.code == 2));
        assert!(matches!(Scheme::parse("hgraph:/no/such/file"), Err(f) if f.code == 2));
    }

    #[test]
    fn components_split_a_disconnected_graph() {
        let g = Graph::from_index_edges(5, &[(1, 2), (4, 5)]);
        let comps = components(&g);
        let sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![2, 1, 2]);
    }

    #[test]
    fn induced_subgraph_keeps_inner_edges_only() {
        let g = Graph::cycle(4);
        let verts: Vec<Letter> = ["1", "2", "3"]
            .iter()
            .map(|s| Letter::new(*s).unwrap())
            .collect();
        let sub = induced(&g, &verts);
        assert_eq!(sub.n(), 3);
        assert_eq!(sub.m(), 2);
    }

    #[test]
    fn cli_rejects_missing_required_args() {
        use clap::Parser;
        assert!(Cli::try_parse_from(["wordgraph", "decode"]).is_err());
        assert!(Cli::try_parse_from(["wordgraph", "encode", "--scheme", "copy"]).is_err());
        assert!(Cli::try_parse_from(["wordgraph", "atlas", "--lang", "dyck"]).is_ok());
    }
}
