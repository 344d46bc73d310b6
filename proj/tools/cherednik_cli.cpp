#include <fstream>
#include <iostream>
#include <vector>

#include "cherednik/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    cherednik::cli::JobResult res = cherednik::cli::run_job(args);
    if (!res.diagnostics.empty()) std::cerr << res.diagnostics << "\n";
    if (!res.out_path.empty()) {
        std::ofstream f(res.out_path);
        if (!f) {
            std::cerr << "cannot write " << res.out_path << "\n";
            return 2;
        }
        f << res.output << "\n";
    } else if (!res.output.empty()) {
        std::cout << res.output << "\n";
    }
    return res.exit_code;
}
