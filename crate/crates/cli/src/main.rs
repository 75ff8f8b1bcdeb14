//! `subwords`: universality indexes of explicit and SLP-compressed words.

mod selftest;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::json;
use subwords::signature::bytes_to_text;
use subwords::{arch_factorize, iota, zeta, Alphabet, Signature, Slp, Word};

#[derive(Parser, Debug)]
#[command(name = "subwords", version, about)]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Arch factorization, printed as `arch|arch|…·rest`.
    Factorize(WordArgs),
    /// Subword universality index.
    Iota(WordArgs),
    /// Circular subword universality index.
    Zeta(WordArgs),
    /// Universality signature as JSON (always over the word's own letters).
    Signature(WordArgs),
    /// Signature of the concatenation of two words, from their signatures.
    Compose { left: PathBuf, right: PathBuf },
    /// Indexes, length or expansion of a straight-line program.
    Slp(SlpArgs),
    /// Cross-check the algorithms against brute-force oracles.
    Selftest(selftest::SelftestArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("input").required(true).args(["word", "file"])))]
struct WordArgs {
    /// The word, as raw bytes.
    word: Option<OsString>,
    /// Read the word from a file instead (raw bytes).
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
    /// Reference alphabet; defaults to the letters of the word.
    #[arg(long, value_name = "CHARS")]
    alphabet: Option<OsString>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("query").required(true).args(["iota", "zeta", "length", "expand"])))]
struct SlpArgs {
    path: PathBuf,
    #[arg(long)]
    iota: bool,
    #[arg(long)]
    zeta: bool,
    #[arg(long)]
    length: bool,
    #[arg(long)]
    expand: bool,
    /// Refuse to expand beyond this many letters.
    #[arg(long, value_name = "N", default_value_t = 1 << 20, requires = "expand")]
    max_len: usize,
}

impl WordArgs {
    fn load(&self) -> Result<Word> {
        let bytes = match (&self.word, &self.file) {
            (Some(w), _) => w.clone().into_encoded_bytes(),
            (None, Some(path)) => read(path)?,
            (None, None) => unreachable!("clap requires one input"),
        };
        let word = match &self.alphabet {
            Some(chars) => {
                let alphabet =
                    Alphabet::new(chars.as_encoded_bytes()).context("invalid --alphabet")?;
                Word::with_alphabet(&bytes, Arc::new(alphabet))?
            }
            None if bytes.is_empty() => bail!("the empty word needs an explicit --alphabet"),
            None => Word::new(&bytes)?,
        };
        Ok(word)
    }
}

fn read(path: &Path) -> Result<Vec<u8>> {
    std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_signature(path: &Path) -> Result<Signature> {
    let text = String::from_utf8(read(path)?)
        .with_context(|| format!("{} is not UTF-8", path.display()))?;
    Signature::from_json_str(&text).with_context(|| format!("in {}", path.display()))
}

fn word_json(u: &Word) -> serde_json::Value {
    json!({
        "word": bytes_to_text(&u.to_bytes()),
        "alphabet": bytes_to_text(u.alphabet().symbols()),
    })
}

fn emit_json(out: &mut dyn Write, value: &serde_json::Value) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<bool> {
    match cli.command {
        Command::Factorize(args) => {
            let u = args.load()?;
            let f = arch_factorize(&u);
            let (arches, rest) = f.split(&u);
            if cli.json {
                let mut v = word_json(&u);
                v["arches"] = arches
                    .iter()
                    .map(|s| bytes_to_text(&s.to_bytes()))
                    .collect();
                v["rest"] = bytes_to_text(&rest.to_bytes()).into();
                v["lambdas"] = f.lambdas().into();
                v["iota"] = f.arch_count().into();
                emit_json(out, &v)?;
            } else {
                let mut line = Vec::new();
                for (k, s) in arches.iter().enumerate() {
                    if k > 0 {
                        line.push(b'|');
                    }
                    line.extend(s.to_bytes());
                }
                line.extend("·".as_bytes());
                line.extend(rest.to_bytes());
                line.push(b'\n');
                out.write_all(&line)?;
            }
        }
        Command::Iota(args) => {
            let u = args.load()?;
            index_output(out, cli.json, &u, "iota", iota(&u))?;
        }
        Command::Zeta(args) => {
            let u = args.load()?;
            index_output(out, cli.json, &u, "zeta", zeta(&u))?;
        }
        Command::Signature(args) => {
            let u = args.load()?;
            let sig = Signature::of_word(&u)?;
            writeln!(out, "{}", sig.to_json_string())?;
        }
        Command::Compose { left, right } => {
            let sig = read_signature(&left)?.compose(&read_signature(&right)?);
            writeln!(out, "{}", sig.to_json_string())?;
        }
        Command::Slp(args) => slp_command(out, cli.json, &args)?,
        Command::Selftest(args) => return selftest::run(&args, cli.json, out),
    }
    Ok(true)
}

fn index_output(out: &mut dyn Write, json: bool, u: &Word, name: &str, value: usize) -> Result<()> {
    if json {
        let mut v = word_json(u);
        v[name] = value.into();
        emit_json(out, &v)
    } else {
        writeln!(out, "{value}")?;
        Ok(())
    }
}

fn slp_command(out: &mut dyn Write, json: bool, args: &SlpArgs) -> Result<()> {
    let text = String::from_utf8(read(&args.path)?)
        .with_context(|| format!("{} is not UTF-8", args.path.display()))?;
    let slp: Slp = text
        .parse()
        .with_context(|| format!("in {}", args.path.display()))?;
    let (key, value) = if args.iota {
        ("iota", slp.root_signature().iota().to_string())
    } else if args.zeta {
        ("zeta", slp.root_signature().zeta().to_string())
    } else if args.length {
        ("length", slp.expansion_length().to_string())
    } else {
        let bytes = slp.expand_bytes(args.max_len)?;
        if json {
            emit_json(
                out,
                &json!({ "expansion": bytes_to_text(&bytes), "length": bytes.len().to_string() }),
            )?;
        } else {
            out.write_all(&bytes)?;
            writeln!(out)?;
        }
        return Ok(());
    };
    if json {
        emit_json(out, &json!({ key: value }))
    } else {
        writeln!(out, "{value}")?;
        Ok(())
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            let _ = out.flush();
            eprintln!("subwords: {err:#}");
            ExitCode::from(1)
        }
    }
}
