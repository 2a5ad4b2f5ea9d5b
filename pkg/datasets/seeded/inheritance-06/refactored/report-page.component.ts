import { Component, Injectable } from '@angular/core';
import { PageTitleService } from './page-title.service';

@Component({
  selector: 'app-report-page',
  template: `<h1>{{ pageTitle }}</h1>`
})
export class ReportPageComponent {
  pageTitle = 'Report Page';
  constructor(private titles: PageTitleService) {}
  ngOnInit() {
    this.titles.initPage(this.pageTitle);
  }
}
