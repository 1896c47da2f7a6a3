"""Schemas of the bundled mini corpus: five small databases."""

# (db_id, [(table, [(column, type), ...]), ...], primary keys, foreign keys)
# Keys are given as "table.column".
DATABASES = [
    (
        "concert_singer",
        [
            ("stadium", [("Stadium_ID", "number"), ("Location", "text"), ("Name", "text"),
                         ("Capacity", "number"), ("Highest", "number"), ("Lowest", "number"),
                         ("Average", "number")]),
            ("singer", [("Singer_ID", "number"), ("Name", "text"), ("Country", "text"),
                        ("Song_Name", "text"), ("Song_release_year", "text"), ("Age", "number"),
                        ("Is_male", "others")]),
            ("concert", [("concert_ID", "number"), ("concert_Name", "text"), ("Theme", "text"),
                         ("Stadium_ID", "text"), ("Year", "text")]),
            ("singer_in_concert", [("concert_ID", "number"), ("Singer_ID", "text")]),
        ],
        ["stadium.Stadium_ID", "singer.Singer_ID", "concert.concert_ID",
         "singer_in_concert.concert_ID"],
        [("concert.Stadium_ID", "stadium.Stadium_ID"),
         ("singer_in_concert.Singer_ID", "singer.Singer_ID"),
         ("singer_in_concert.concert_ID", "concert.concert_ID")],
    ),
    (
        "world_1",
        [
            ("city", [("ID", "number"), ("Name", "text"), ("CountryCode", "text"),
                      ("District", "text"), ("Population", "number")]),
            ("country", [("Code", "text"), ("Name", "text"), ("Continent", "text"),
                         ("Region", "text"), ("SurfaceArea", "number"), ("IndepYear", "number"),
                         ("Population", "number"), ("LifeExpectancy", "number"),
                         ("GNP", "number"), ("GovernmentForm", "text"),
                         ("HeadOfState", "text")]),
            ("countrylanguage", [("CountryCode", "text"), ("Language", "text"),
                                 ("IsOfficial", "text"), ("Percentage", "number")]),
        ],
        ["city.ID", "country.Code", "countrylanguage.CountryCode"],
        [("city.CountryCode", "country.Code"),
         ("countrylanguage.CountryCode", "country.Code")],
    ),
    (
        "car_1",
        [
            ("continents", [("ContId", "number"), ("Continent", "text")]),
            ("countries", [("CountryId", "number"), ("CountryName", "text"),
                           ("Continent", "number")]),
            ("car_makers", [("Id", "number"), ("Maker", "text"), ("FullName", "text"),
                            ("Country", "text")]),
            ("model_list", [("ModelId", "number"), ("Maker", "number"), ("Model", "text")]),
            ("car_names", [("MakeId", "number"), ("Model", "text"), ("Make", "text")]),
            ("cars_data", [("Id", "number"), ("MPG", "text"), ("Cylinders", "number"),
                           ("Edispl", "number"), ("Horsepower", "text"), ("Weight", "number"),
                           ("Accelerate", "number"), ("Year", "number")]),
        ],
        ["continents.ContId", "countries.CountryId", "car_makers.Id", "model_list.ModelId",
         "car_names.MakeId", "cars_data.Id"],
        [("countries.Continent", "continents.ContId"),
         ("car_makers.Country", "countries.CountryId"),
         ("model_list.Maker", "car_makers.Id"),
         ("car_names.Model", "model_list.Model"),
         ("cars_data.Id", "car_names.MakeId")],
    ),
    (
        "cre_Doc_Template_Mgt",
        [
            ("Ref_Template_Types", [("Template_Type_Code", "text"),
                                    ("Template_Type_Description", "text")]),
            ("Templates", [("Template_ID", "number"), ("Version_Number", "number"),
                           ("Template_Type_Code", "text"), ("Date_Effective_From", "time"),
                           ("Date_Effective_To", "time"), ("Template_Details", "text")]),
            ("Documents", [("Document_ID", "number"), ("Template_ID", "number"),
                           ("Document_Name", "text"), ("Document_Description", "text"),
                           ("Other_Details", "text")]),
            ("Paragraphs", [("Paragraph_ID", "number"), ("Document_ID", "number"),
                            ("Paragraph_Text", "text"), ("Other_Details", "text")]),
        ],
        ["Ref_Template_Types.Template_Type_Code", "Templates.Template_ID",
         "Documents.Document_ID", "Paragraphs.Paragraph_ID"],
        [("Templates.Template_Type_Code", "Ref_Template_Types.Template_Type_Code"),
         ("Documents.Template_ID", "Templates.Template_ID"),
         ("Paragraphs.Document_ID", "Documents.Document_ID")],
    ),
    (
        "dog_kennels",
        [
            ("Breeds", [("breed_code", "text"), ("breed_name", "text")]),
            ("Owners", [("owner_id", "number"), ("first_name", "text"), ("last_name", "text"),
                        ("state", "text"), ("city", "text"), ("email_address", "text")]),
            ("Dogs", [("dog_id", "number"), ("owner_id", "number"), ("breed_code", "text"),
                      ("name", "text"), ("age", "text"), ("date_arrived", "time"),
                      ("weight", "text")]),
            ("Professionals", [("professional_id", "number"), ("role_code", "text"),
                               ("first_name", "text"), ("last_name", "text"),
                               ("state", "text")]),
            ("Treatments", [("treatment_id", "number"), ("dog_id", "number"),
                            ("professional_id", "number"), ("treatment_type_code", "text"),
                            ("date_of_treatment", "time"), ("cost_of_treatment", "number")]),
        ],
        ["Breeds.breed_code", "Owners.owner_id", "Dogs.dog_id",
         "Professionals.professional_id", "Treatments.treatment_id"],
        [("Dogs.owner_id", "Owners.owner_id"),
         ("Dogs.breed_code", "Breeds.breed_code"),
         ("Treatments.dog_id", "Dogs.dog_id"),
         ("Treatments.professional_id", "Professionals.professional_id")],
    ),
]


def tables_json():
    out = []
    for db_id, tables, pks, fks in DATABASES:
        names = [t for t, _ in tables]
        cols = [[-1, "*"]]
        types = ["text"]
        index = {}
        for ti, (t, columns) in enumerate(tables):
            for c, ty in columns:
                index["%s.%s" % (t, c)] = len(cols)
                cols.append([ti, c])
                types.append(ty)
        out.append({
            "db_id": db_id,
            "table_names_original": names,
            "table_names": [n.lower().replace("_", " ") for n in names],
            "column_names_original": cols,
            "column_names": [[ti, c.lower().replace("_", " ")] for ti, c in cols],
            "column_types": types,
            "primary_keys": [index[k] for k in pks],
            "foreign_keys": [[index[a], index[b]] for a, b in fks],
        })
    return out
