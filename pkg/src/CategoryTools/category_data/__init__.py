from CategoryTools.category_data.bundled import (CATEGORY_DATA_PATH, bundled_names,
                                                 bundled_path)
