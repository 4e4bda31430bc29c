/**
 * @file
 * @brief Command-line front end over the library.
 *
 * Exit codes: 0 success, 1 relation failure or not a representation, 2 malformed input,
 * 3 internal inconsistency.
 */

#pragma once

#include "loopbraid/classifier.hpp"
#include "loopbraid/combinatorics.hpp"
#include "loopbraid/error.hpp"
#include "loopbraid/io.hpp"
#include "loopbraid/matchcat.hpp"
#include "loopbraid/recipe.hpp"
#include "loopbraid/relations.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace loopbraid::cli {

enum ExitCode : int { Ok = 0, RelationFailure = 1, MalformedInput = 2, Internal = 3 };

inline int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotARepresentation:
        case ErrorKind::FTypeDetected:
        case ErrorKind::Unclassifiable:
        case ErrorKind::NotABraidSolution:
        case ErrorKind::NotInvertible: return RelationFailure;
        case ErrorKind::InconsistentParameters:
        case ErrorKind::OracleMismatch: return Internal;
        default: return MalformedInput;
    }
}

namespace detail {

/// Inline JSON when the argument starts with '{' or '[', otherwise a file path.
inline io::Json read_input(const std::string &arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
        return io::parse_json(arg);
    }
    std::ifstream in(arg);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot read '" + arg + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return io::parse_json(buf.str());
}

inline std::vector<int> parse_map(const std::string &text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) {
                throw Error(ErrorKind::ParseError, "bad map entry '" + item + "'");
            }
        } catch (const std::logic_error &) {
            throw Error(ErrorKind::ParseError, "bad map entry '" + item + "'");
        }
    }
    if (out.empty()) {
        throw Error(ErrorKind::ParseError, "empty map");
    }
    return out;
}

inline io::Json count_json(const BigInt &x) {
    if (x.fits_slong_p()) {
        return x.get_si();
    }
    return x.get_str();
}

}  // namespace detail

/// Runs one command; args excludes the program name.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{ "Loop-braid representation toolkit", "loopbraid" };
    app.require_subcommand(1);

    int enum_n = 0;
    bool enum_signed_flag = false;
    bool enum_labelled_flag = false;
    bool enum_force = false;
    std::string enum_format = "json";
    auto *cmd_enum = app.add_subcommand("enumerate", "List index sets of rank N");
    cmd_enum->add_option("--n", enum_n, "Rank")->required()->check(CLI::NonNegativeNumber);
    auto *opt_signed = cmd_enum->add_flag("--signed", enum_signed_flag, "Signed multisets");
    cmd_enum->add_flag("--labelled", enum_labelled_flag, "Labelled shapes")->excludes(opt_signed);
    cmd_enum->add_flag("--force", enum_force, "Allow labelled enumeration above N = 8");
    cmd_enum->add_option("--format", enum_format, "json or tsv")->check(CLI::IsMember({ "json", "tsv" }));

    int count_max = 0;
    bool count_signed = false;
    std::string count_format = "text";
    auto *cmd_count = app.add_subcommand("count", "Coefficients of the counting series");
    cmd_count->add_option("--max", count_max, "Largest degree")->required()->check(CLI::NonNegativeNumber);
    cmd_count->add_flag("--signed", count_signed, "Signed series");
    cmd_count->add_option("--format", count_format, "text, json or tsv")->check(CLI::IsMember({ "text", "json", "tsv" }));

    std::string shape_arg;
    std::string params_arg;
    bool random_flag = false;
    std::uint64_t seed = 0;
    auto *cmd_construct = app.add_subcommand("construct", "Build the recipe pair for a shape");
    cmd_construct->add_option("--shape", shape_arg, "Shape file or inline JSON")->required();
    auto *opt_params = cmd_construct->add_option("--params", params_arg, "Parameter file or inline JSON");
    auto *opt_random = cmd_construct->add_flag("--random", random_flag, "Sample parameters");
    cmd_construct->add_option("--seed", seed, "Sampling seed")->needs(opt_random);
    opt_params->excludes(opt_random);

    std::string pair_arg;
    std::string method = "subsets";
    bool float_import = false;
    double eps = 1e-9;
    auto *cmd_verify = app.add_subcommand("verify", "Check the defining relations");
    cmd_verify->add_option("file", pair_arg, "Pair file")->required();
    cmd_verify->add_option("--method", method, "dense, subsets or both")->check(CLI::IsMember({ "dense", "subsets", "both" }));
    auto *opt_float = cmd_verify->add_flag("--float-import", float_import, "Accept floating point scalars");
    cmd_verify->add_option("--eps", eps, "Rounding tolerance for float import")->needs(opt_float)->check(CLI::PositiveNumber);

    auto *cmd_classify = app.add_subcommand("classify", "Recover shape, parameters and gauge");
    cmd_classify->add_option("file", pair_arg, "Pair file")->required();

    std::string gauge_arg;
    auto *cmd_gauge = app.add_subcommand("gauge", "Apply a diagonal gauge transform");
    cmd_gauge->add_option("file", pair_arg, "Pair file")->required();
    cmd_gauge->add_option("--m", gauge_arg, "Gauge file or inline JSON")->required();

    std::string map_arg;
    auto *cmd_restrict = app.add_subcommand("restrict", "Restrict along an injective map");
    cmd_restrict->add_option("file", pair_arg, "Pair file")->required();
    cmd_restrict->add_option("--map", map_arg, "Comma separated images")->required();

    int width = 2;
    auto *cmd_export = app.add_subcommand("export-dense", "Dense sparse-triplet export");
    cmd_export->add_option("file", pair_arg, "Pair file")->required();
    cmd_export->add_option("--width", width, "2 or 3")->check(CLI::IsMember({ 2, 3 }));

    std::vector<std::string> argv_store{ "loopbraid" };
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_store) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : MalformedInput;
    }

    const auto emit = [&](const io::Json &j) { out << j.dump(2) << '\n'; };

    try {
        if (cmd_enum->parsed()) {
            if (enum_labelled_flag) {
                if (enum_n > 8 && !enum_force) {
                    err << "enumerate --labelled refuses N > 8 without --force\n";
                    return MalformedInput;
                }
                const auto all = enum_labelled(enum_n);
                if (enum_format == "tsv") {
                    for (std::size_t k = 0; k < all.size(); ++k) {
                        out << k + 1 << '\t' << to_string(all[k]) << '\n';
                    }
                } else {
                    io::Json arr = io::Json::array();
                    for (const auto &l : all) {
                        arr.push_back(io::to_json(l));
                    }
                    emit(arr);
                }
            } else if (enum_signed_flag) {
                const auto all = enum_signed(enum_n);
                if (enum_format == "tsv") {
                    for (std::size_t k = 0; k < all.size(); ++k) {
                        out << k + 1 << '\t' << to_string(all[k]) << '\n';
                    }
                } else {
                    io::Json arr = io::Json::array();
                    for (const auto &s : all) {
                        arr.push_back(io::to_json(s));
                    }
                    emit(arr);
                }
            } else {
                const auto all = enum_multisets(enum_n);
                if (enum_format == "tsv") {
                    for (std::size_t k = 0; k < all.size(); ++k) {
                        out << k + 1 << '\t' << to_string(SignedShape{ all[k], {} }) << '\n';
                    }
                } else {
                    io::Json arr = io::Json::array();
                    for (const auto &m : all) {
                        arr.push_back(io::to_json(m));
                    }
                    emit(arr);
                }
            }
            return Ok;
        }
        if (cmd_count->parsed()) {
            const CountSeries series = count_series(count_max);
            const auto &seq = count_signed ? series.signed_counts : series.unsigned_counts;
            if (count_format == "json") {
                io::Json arr = io::Json::array();
                for (const auto &x : seq) {
                    arr.push_back(detail::count_json(x));
                }
                emit(io::Json{ { count_signed ? "signed" : "unsigned", arr } });
            } else if (count_format == "tsv") {
                for (std::size_t n = 0; n < seq.size(); ++n) {
                    out << n << '\t' << seq[n].get_str() << '\n';
                }
            } else {
                for (std::size_t n = 0; n < seq.size(); ++n) {
                    out << (n == 0 ? "" : " ") << seq[n].get_str();
                }
                out << '\n';
            }
            return Ok;
        }
        if (cmd_construct->parsed()) {
            if (params_arg.empty() && !random_flag) {
                err << "construct needs --params or --random\n";
                return MalformedInput;
            }
            const LabelledShape lambda = io::any_shape_from_json(detail::read_input(shape_arg));
            io::PairFile file;
            if (random_flag) {
                const ParamPoint x = random_point(lambda, seed);
                file.pair = make_recipe(lambda, x);
                file.metadata = io::Json{ { "shape", io::to_json(lambda) }, { "params", io::to_json(x) }, { "seed", seed } };
            } else {
                const InvariantPoint x = io::params_from_json(detail::read_input(params_arg));
                file.pair = make_recipe(lambda, x);
                file.metadata = io::Json{ { "shape", io::to_json(lambda) }, { "params", io::to_json(x) } };
            }
            emit(io::to_json(file));
            return Ok;
        }
        if (cmd_verify->parsed()) {
            io::ScalarReader rd;
            rd.float_import = float_import;
            rd.eps = eps;
            const io::PairFile file = io::pair_file_from_json(detail::read_input(pair_arg), rd);
            const Method m = method == "dense" ? Method::Dense : method == "both" ? Method::Both : Method::Subsets;
            const RelationReport rep = verify_pair(file.pair, m);
            emit(io::to_json(rep));
            return rep.all_hold() ? Ok : RelationFailure;
        }
        if (cmd_classify->parsed()) {
            const io::PairFile file = io::pair_file_from_json(detail::read_input(pair_arg));
            emit(io::to_json(interrogate(file.pair)));
            return Ok;
        }
        if (cmd_gauge->parsed()) {
            io::PairFile file = io::pair_file_from_json(detail::read_input(pair_arg));
            file.pair = gauge_transform(file.pair, io::gauge_from_json(detail::read_input(gauge_arg)));
            file.metadata = nullptr;
            emit(io::to_json(file));
            return Ok;
        }
        if (cmd_restrict->parsed()) {
            io::PairFile file = io::pair_file_from_json(detail::read_input(pair_arg));
            file.pair = restrict(file.pair, detail::parse_map(map_arg));
            file.metadata = nullptr;
            emit(io::to_json(file));
            return Ok;
        }
        if (cmd_export->parsed()) {
            const io::PairFile file = io::pair_file_from_json(detail::read_input(pair_arg));
            const int N = file.pair.S.rank();
            const DenseMatrix S = alpha_to_dense(file.pair.S);
            const DenseMatrix R = alpha_to_dense(file.pair.R);
            if (width == 2) {
                emit(io::Json{ { "S", io::to_json(S) }, { "R", io::to_json(R) } });
            } else {
                emit(io::Json{ { "S1", io::to_json(shift_embed(S, 1, N)) },
                               { "S2", io::to_json(shift_embed(S, 2, N)) },
                               { "R1", io::to_json(shift_embed(R, 1, N)) },
                               { "R2", io::to_json(shift_embed(R, 2, N)) } });
            }
            return Ok;
        }
    } catch (const Error &e) {
        err << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const io::Json::exception &e) {
        err << "ParseError: " << e.what() << '\n';
        return MalformedInput;
    }
    return MalformedInput;
}

}  // namespace loopbraid::cli
