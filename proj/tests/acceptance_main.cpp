// Runs the acceptance suite and prints one line per criterion.

#include <iostream>
#include <thread>

#include "acceptance.hpp"

int main() {
    rquint::acceptance::Options opts;
    opts.jobs = std::max(1u, std::thread::hardware_concurrency());
    int failed = 0;
    rquint::acceptance::run_all(opts, [&](const rquint::acceptance::Result& r) {
        std::cout << r.line() << std::endl;
        failed += !r.passed();
    });
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
    return failed ? 1 : 0;
}
