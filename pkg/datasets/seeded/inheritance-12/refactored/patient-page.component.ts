import { Component, Injectable } from '@angular/core';
import { PageTitleService } from './page-title.service';

@Component({
  selector: 'app-patient-page',
  template: `<h1>{{ pageTitle }}</h1>`
})
export class PatientPageComponent {
  pageTitle = 'Patient Page';
  constructor(private titles: PageTitleService) {}
  ngOnInit() {
    this.titles.initPage(this.pageTitle);
  }
}
