// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is nonzero if any criterion fails.

#include <iostream>
#include <string>
#include <thread>

#include "planar/verify.hpp"

int main(int argc, char** argv)
{
	planar::VerifyOptions opt;
	opt.workers = int(std::max(1u, std::thread::hardware_concurrency()));
	for (int i = 1; i < argc; ++i)
		opt.only.insert(std::stoi(argv[i]));
	int failures = 0;
	planar::run_verification(opt, [&](const planar::CriterionResult& r) {
		std::cout << planar::format_result(r) << std::endl;
		if (!r.pass)
			std::cout << "    details: " << r.details.dump() << std::endl;
		failures += !r.pass;
	});
	std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
	return failures == 0 ? 0 : 1;
}
