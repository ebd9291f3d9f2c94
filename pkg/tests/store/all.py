# -*- coding: utf-8 -*-

if __name__ == "__main__":
    from online_thue_kit.tests import run_cov_test

    run_cov_test(
        __file__,
        "online_thue_kit.store",
        is_folder=True,
        preview=False,
    )
